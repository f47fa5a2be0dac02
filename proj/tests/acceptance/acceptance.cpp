// One line per acceptance criterion; exit status is non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/error.hpp"
#include "cocycle_forge/generators.hpp"
#include "cocycle_forge/oracle.hpp"
#include "support.hpp"

using namespace cocycle_forge;
using namespace cocycle_forge::testing;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got '" << got << "' want '" << want << "'";
      failures_.push_back(s.str());
    }
  }
  void note(const std::string& n) { notes_ = n; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::string notes_;
};

const ElementSet kJ{1, 2, 3, 4, 5, 6, 7, 8};

struct Run {
  int code;
  std::string out;
};

void z9_golden(Criterion& c) {
  const Cocycle f = cocycle_from_r(z9_r());
  c.expect_eq(emit_table(f.table()), data("z9_table.txt"), "f_r table");
  c.expect_eq(to_string(inertial_group(f).members()), std::string("{0}"), "inertial group");
  const auto ctx = AlgebraContext::make(f);
  c.expect_eq(format_catalog(all_generators(ctx)),
              std::string("{{(1)},{(1,1)},{(1,1,1)},{(5,8),(8,5),(1,1,1,1)},{(5)},{(1,5),(5,1)},"
                          "{(1,1,5),(1,5,1),(5,1,1)},{(8)}}"),
              "generator catalog");
  const auto reps = classify_annihilators(*ctx).nontrivial_representatives;
  c.expect(reps == std::vector<Element>{4, 7}, "non-trivial annihilator classes {4,7}");
}

void z9_decomposition(Criterion& c) {
  const auto ctx = z9_context();
  const auto d = decompose_by_classes(ctx);
  const std::vector<ElementSet> expected{
      {3, 4, 5, 6, 7, 8}, {4, 5, 6, 7, 8}, {6, 7}, {2, 3, 4, 7, 8}, {3, 4, 8}};
  c.expect(!d.unique_class.has_value(), "no unique-class verdict");
  c.expect_eq(d.parts.size(), expected.size(), "part count");
  const Cocycle f0 = waterhouse(ctx->inertial());
  for (std::size_t i = 0; i < std::min(d.parts.size(), expected.size()); ++i) {
    const auto& p = d.parts[i];
    c.expect_eq(to_string(p.ideal.members()), to_string(expected[i]), "I_" + std::to_string(i + 1));
    c.expect(p.unique_class, "part " + std::to_string(i + 1) + " has a unique annihilator class");
    c.expect(compare(f0, p.cocycle) == Ordering::less && compare(p.cocycle, ctx->cocycle()) == Ordering::less,
             "f0 < f_I < f_r for part " + std::to_string(i + 1));
  }
  std::vector<BinaryTable> tables;
  for (const auto& p : d.parts) tables.push_back(p.cocycle.table());
  c.expect(!tables.empty() && vee(tables) == ctx->cocycle().table(), "join of parts is f_r");
  const Run r = [] {
    std::ostringstream out, err;
    const int code = cli::run_command(
        {"decompose", "--by", "classes", "--group", "cyclic9", "--r", data_path("z9_r.txt")}, out, err);
    return Run{code, out.str()};
  }();
  c.expect(r.code == 0 && r.out == data("z9_decompose_classes.golden"), "CLI report matches golden");
}

void lift_table(Criterion& c) {
  const auto ctx = z9_context();
  const auto r = z9_r();
  const std::vector<ElementSet> expected{
      {3, 4, 5, 6, 7, 8}, {4, 5, 6, 7, 8}, {6, 7}, {2, 3, 4, 7, 8}, {3, 4, 8}};
  const std::vector<std::string> squares{"{4}", "{4}", "{}", "{4}", "{}"};
  // Columns r_1 .. r_5, rows 0..8.
  const std::vector<std::vector<std::string>> table{
      {"(0,0,0,0,0)", "(1,1,1,1,0)", "(2,2,2,2,0)", "(3,3,3,0,0)", "(4,4,0,0,0)", "(1,1,1,0,0)", "(2,2,2,0,0)",
       "(3,3,3,0,0)", "(3,3,3,0,0)"},
      {"(0,0,0,0,0)", "(1,1,1,1,0)", "(2,2,2,2,0)", "(3,3,3,3,0)", "(4,4,0,0,0)", "(1,1,1,0,0)", "(2,2,2,0,0)",
       "(3,3,3,0,0)", "(3,3,3,0,0)"},
      {"(0,0,0,0)", "(1,1,1,0)", "(2,2,2,0)", "(3,3,3,0)", "(4,4,4,0)", "(1,1,1,0)", "(2,2,0,0)", "(3,3,0,0)",
       "(3,3,3,0)"},
      {"(0,0,0,0,0)", "(1,1,1,1,0)", "(2,2,2,0,0)", "(3,3,3,0,0)", "(4,4,0,0,0)", "(1,1,1,1,0)", "(2,2,2,2,0)",
       "(3,3,3,0,0)", "(3,3,3,0,0)"},
      {"(0,0,0,0)", "(1,1,1,0)", "(2,2,2,0)", "(3,3,0,0)", "(4,4,0,0)", "(1,1,1,0)", "(2,2,2,0)", "(3,3,3,0)",
       "(3,3,0,0)"},
  };
  std::size_t matched = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto ii = ideal(ctx, expected[i]);
    const auto sq = ideal_power(ii, 2);
    c.expect_eq(to_string(sq.members()), squares[i], "I_" + std::to_string(i + 1) + "^2");
    if (!sq.empty()) c.expect(ideal_power(ii, 4).empty(), "I_" + std::to_string(i + 1) + "^4 = 0");
    std::vector<ElementSet> sets{kJ, expected[i]};
    if (!sq.empty()) sets.push_back(sq.members());
    sets.push_back({});
    const auto lifted = chain_lift(r, chain_of(ctx, sets));
    for (Element s = 0; s < 9; ++s) {
      const std::string got = lifted.monoid()->format(lifted(s));
      if (got == table[i][s])
        ++matched;
      else
        c.expect(false, "r_" + std::to_string(i + 1) + "(" + std::to_string(s) + ") = " + got);
    }
    c.expect(cocycle_from_r(lifted) == f_sub_I(ii), "f_I = f_r for i = " + std::to_string(i + 1));
  }
  c.note(std::to_string(matched) + "/45 tuples");
}

void bstar_parts(Criterion& c) {
  const auto ctx = z9_context();
  const Cocycle fr_prime = cocycle_from_r(z9_r_prime());
  c.expect(f_sub_I(ideal(ctx, {6, 7})) == fr_prime, "f_{I_3} = f_{r'}");
  const auto pctx = AlgebraContext::make(fr_prime);
  c.expect_eq(format_catalog(all_generators(pctx)),
              std::string("{{(1)},{(1,1)},{(1,1,1)},{(5,8),(8,5),(1,1,1,1)},{(5)},{(6)},{(7)},{(8)}}"),
              "generators of f_{r'}");
  const auto b = decompose_by_bstar(pctx);
  c.expect(b.recombines && b.join == fr_prime.table(), "B* parts recombine to f_{r'}");
  std::vector<std::string> ideals, catalogs;
  for (const auto& p : b.parts) {
    const std::string s = to_string(p.ideal.members());
    if (std::find(ideals.begin(), ideals.end(), s) != ideals.end()) continue;
    ideals.push_back(s);
    catalogs.push_back(format_catalog(all_generators(AlgebraContext::make(p.cocycle))));
  }
  c.expect(ideals == std::vector<std::string>{"{4,5,8}", "{1,2,3,4}"}, "P_1 = {4,5,8}, P_2 = {1,2,3,4}");
  c.expect(catalogs == std::vector<std::string>{
                           "{{(1)},{(1,1)},{(1,1,1)},{(5,8),(8,5)},{(5)},{(6)},{(7)},{(8)}}",
                           "{{(1)},{(1,1)},{(1,1,1)},{(1,1,1,1)},{(5)},{(6)},{(7)},{(8)}}"},
           "generator lists of both parts");
}

void d3_checks(Criterion& c) {
  const auto ctx = d3_context();
  const auto ann = classify_annihilators(*ctx);
  c.expect(ann.nontrivial_representatives == std::vector<Element>{4}, "unique non-trivial annihilator ab");
  c.expect_eq(to_string(ann.nontrivial), std::string("{4}"), "annihilator class {ab}");
  const auto gens = all_generators(ctx);
  c.expect_eq(format_word_set(ctx->group(), gens.words(4)), std::string("{(a,b),(b,a,a)}"), "words of ab");
  const auto iab = ideal_sum(principal_ideal(ctx, 1), principal_ideal(ctx, 3));
  for (const auto& w : gens.words(4)) c.expect(ideal_of_word(ctx, w) == iab, "I_w = I_a + I_b");
  auto edges = generator_graph_edges(gens);
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<std::string, std::string>> expected{
      {"()", "(a)"},    {"()", "(b)"},    {"(a)", "(a,a)"},     {"(a)", "(a,b)"},    {"(a)", "(b,a)"},
      {"(b)", "(b,a)"}, {"(b)", "(a,b)"}, {"(a,a)", "(b,a,a)"}, {"(b,a)", "(b,a,a)"}};
  std::sort(expected.begin(), expected.end());
  c.expect(edges == expected, "generator graph has exactly the reference cover edges");
  const std::string dot = graphs_dot(ctx, GraphKind::generator);
  for (const auto& [a, b] : expected)
    c.expect(dot.find("\"" + a + "\" -- \"" + b + "\"") != std::string::npos, "DOT edge " + a + " -- " + b);
  const auto res = search_realization(ctx, 20);
  c.expect(!res.witness.has_value(), "no realization over naturals with bound 20");
}

void census_suite(Criterion& c) {
  std::string summary;
  std::map<std::string, std::size_t> exercised;
  for (const auto& g : {make_cyclic(2), make_cyclic(3), make_cyclic(4), make_dihedral(3)}) {
    CensusConfig cfg;
    cfg.group = g;
    cfg.max_chains = 10'000;
    cfg.max_chain_length = 4;
    const SuiteReport rep = property_suite(cfg);
    std::size_t passes = 0;
    for (const auto& [name, n] : rep.passes) passes += n;
    summary += " n=" + std::to_string(g->order()) + ":" + std::to_string(rep.cocycles) + "f/" +
               std::to_string(passes) + "checks";
    if (!rep.ok())
      for (std::size_t i = 0; i < std::min<std::size_t>(rep.counterexamples.size(), 5); ++i)
        c.expect(false, rep.counterexamples[i]);
    for (const auto& [name, n] : rep.passes) exercised[name] += n;
  }
  for (const char* required :
       {"chain_cocycle_valid", "leq_f", "chain_break", "waterhouse_iff", "sum_product", "intersection_vee",
        "cap_zero", "class_part_strict", "class_recombination", "bstar_recombination", "morphism",
        "principal_ideal_from_words", "quotient_transport", "trivial_annih_replace", "fI_eq_f", "chain_transport"})
    if (exercised.count(required) == 0) c.expect(false, std::string("property never exercised: ") + required);
  c.note(summary.substr(1));
}

void morphisms(Criterion& c) {
  std::size_t pairs = 0;
  for (const auto& g : {make_cyclic(4), make_dihedral(3)}) {
    CensusConfig cfg;
    cfg.group = g;
    for (const auto& f : enumerate_cocycles(cfg).cocycles) {
      if (inertial_group(f).size() == g->order()) continue;
      const auto ctx = AlgebraContext::make(f);
      for (const auto& i : enumerate_ideals(ctx)) {
        const auto m = morphism_check(i);
        ++pairs;
        if (!m.ok()) c.expect(false, census_record(f) + " I=" + to_string(i.members()) + " " + m.detail);
        c.expect(m.dim_total == g->order() && m.dim_quotient + m.dim_ideal == m.dim_total &&
                     m.dim_ideal == i.size(),
                 "dimension identity");
      }
    }
  }
  c.note(std::to_string(pairs) + " (f,I) pairs");
}

void sandwich(Criterion& c) {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::size_t> order(2, 9);
  std::size_t done = 0;
  SuiteReport rep;
  while (done < 100) {
    const auto g = make_cyclic(order(rng));
    const SemilinearMap r = random_semilinear(g, rng);
    if (r.neutral_set() == g->all()) continue;  // J = 0 leaves no chain to lift along
    const auto ctx = AlgebraContext::make(cocycle_from_r(r));
    rep.merge(check_lift(r, random_chain(ctx, enumerate_ideals(ctx), rng)));
    ++done;
  }
  for (const char* p : {"lift_sandwich", "lift_equality_with_endpoints", "padded_lift_certified"})
    c.expect(rep.passes.count(p) && rep.passes.at(p) == 100, std::string(p) + " passes 100/100");
  for (std::size_t i = 0; i < std::min<std::size_t>(rep.counterexamples.size(), 5); ++i)
    c.expect(false, rep.counterexamples[i]);
  c.note(std::to_string(done) + " random (r, chain) pairs");
}

void negative(Criterion& c) {
  std::vector<SemilinearMap> maps{z9_r(), z9_r_prime()};
  std::mt19937_64 rng(9);
  for (std::size_t n = 3; maps.size() < 12; n = n % 9 + 2) maps.push_back(random_semilinear(make_cyclic(n), rng));
  std::size_t flips = 0, by_validation = 0;
  for (const auto& r : maps) {
    const auto rep = negative_control(r);
    for (const auto& o : rep.outcomes) {
      ++flips;
      by_validation += o.caught_by_validation;
      if (!o.caught_by_validation && !o.caught_by_identity)
        c.expect(false, "uncaught flip at (" + std::to_string(o.sigma) + "," + std::to_string(o.tau) + ")");
      if (o.location.empty()) c.expect(false, "caught flip without a location");
    }
  }
  c.note(std::to_string(flips) + " flips, " + std::to_string(by_validation) + " by validation, " +
         std::to_string(flips - by_validation) + " by f = f_r");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> fn;
  };
  const std::vector<Entry> criteria{
      {"Z/9 golden reproduction", z9_golden},
      {"Z/9 decomposition into five class ideals", z9_decomposition},
      {"Z/9 lex lift table", lift_table},
      {"Z/9 B* decomposition of f_{r'}", bstar_parts},
      {"D3 annihilator, generator graph and realization search", d3_checks},
      {"census property suite on Z/2, Z/3, Z/4, D3", census_suite},
      {"morphism checks over the Z/4 and D3 censuses", morphisms},
      {"sandwich, endpoint equality and padded lifts", sandwich},
      {"negative control", negative},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].name;
    if (!c.notes().empty()) std::cout << " [" << c.notes() << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
