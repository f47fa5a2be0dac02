#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/error.hpp"
#include "cocycle_forge/generators.hpp"
#include "cocycle_forge/io.hpp"
#include "cocycle_forge/oracle.hpp"
#include "cocycle_forge/semilinear.hpp"

namespace cocycle_forge::cli {

namespace {

struct Workspace {
  std::string group;
  std::string cocycle;
  std::string r;
  std::string chain;
  std::string out = "-";
};

// A command writes its text and reports the exit status.
struct Outcome {
  std::string text;
  int code = kSuccess;
};

class Loaded {
 public:
  explicit Loaded(const Workspace& ws) : ws_(ws) {
    if (ws.group.empty()) throw Error(ErrorCode::parse_error, "--group is required");
    group_ = builtin_group(ws.group);
    if (!group_) {
      if (!std::filesystem::exists(ws.group))
        throw Error(ErrorCode::parse_error, "'" + ws.group + "' is neither a builtin group nor a file");
      group_ = parse_group(read_file(ws.group));
    }
    if (!ws.r.empty()) r_ = parse_r(group_, read_file(ws.r));
    if (!ws.cocycle.empty()) {
      f_ = parse_cocycle(group_, read_file(ws.cocycle));
      if (r_ && !(cocycle_from_r(*r_) == *f_))
        throw Error(ErrorCode::context_mismatch, "the cocycle file disagrees with f_r");
    } else if (r_) {
      f_ = cocycle_from_r(*r_);
    }
  }

  const GroupPtr& group() const { return group_; }
  bool has_cocycle() const { return f_.has_value(); }

  const Cocycle& cocycle() const {
    if (!f_) throw Error(ErrorCode::parse_error, "this command needs --cocycle or --r");
    return *f_;
  }

  const SemilinearMap& r() const {
    if (!r_) throw Error(ErrorCode::parse_error, "this command needs --r");
    return *r_;
  }

  const ContextPtr& context() {
    if (!ctx_) ctx_ = AlgebraContext::make(cocycle());
    return ctx_;
  }

  const DescendingChain& chain() {
    if (!chain_) {
      if (ws_.chain.empty()) throw Error(ErrorCode::parse_error, "this command needs --chain");
      chain_ = parse_chain(context(), read_file(ws_.chain));
    }
    return *chain_;
  }

  bool has_chain() const { return !ws_.chain.empty(); }

  MonomialIdeal ideal(const std::string& text) {
    return MonomialIdeal::from_members(context(), parse_index_set(text));
  }

 private:
  const Workspace& ws_;
  GroupPtr group_;
  std::optional<SemilinearMap> r_;
  std::optional<Cocycle> f_;
  ContextPtr ctx_;
  std::optional<DescendingChain> chain_;
};

std::string set_line(const std::string& key, const ElementSet& s) { return key + "=" + to_string(s) + "\n"; }

Outcome cmd_validate(Loaded& in) {
  Outcome o;
  if (in.has_cocycle()) {
    o.text += "valid cocycle " + census_record(in.cocycle()) + "\n";
    if (in.has_chain()) o.text += "valid chain of length " + std::to_string(in.chain().length()) + "\n";
  } else {
    o.text += "valid group of order " + std::to_string(in.group()->order()) + "\n";
  }
  return o;
}

Outcome cmd_inertial(Loaded& in) {
  const Subgroup h = inertial_group(in.cocycle());
  return {set_line("H", h.members()) + set_line("G*", h.complement())};
}

Outcome cmd_radical_powers(Loaded& in) {
  Outcome o;
  const RadicalPowers rp = radical_powers(in.context());
  for (std::size_t k = 0; k < rp.powers.size(); ++k)
    o.text += set_line("J^" + std::to_string(k + 1), rp.powers[k].members());
  o.text += "nilpotency=" + std::to_string(rp.nilpotency) + "\n";
  return o;
}

Outcome cmd_nk(Loaded& in) {
  Outcome o;
  const auto layers = nk_partition(*in.context());
  for (std::size_t k = 0; k < layers.size(); ++k) o.text += set_line("N_" + std::to_string(k + 1), layers[k]);
  return o;
}

Outcome cmd_generators(Loaded& in) {
  const GeneratorSet gens = all_generators(in.context());
  Outcome o;
  const Group& g = *in.group();
  in.context()->gstar().for_each([&](Element s) {
    o.text += g.name(s) + ": " + format_word_set(g, gens.words(s)) + "\n";
  });
  o.text += "catalog=" + format_catalog(gens) + "\n";
  return o;
}

Outcome cmd_annihilators(Loaded& in) {
  const AnnihilatorClasses a = classify_annihilators(*in.context());
  Outcome o;
  o.text += set_line("trivial", a.trivial);
  o.text += set_line("nontrivial", a.nontrivial);
  o.text += set_line("classes", ElementSet::from_range(a.nontrivial_representatives));
  return o;
}

Outcome cmd_graph(Loaded& in, const std::string& kind) {
  const GraphKind k = kind == "element" ? GraphKind::element : GraphKind::generator;
  return {emit_artifact(GraphArtifact{in.context(), k}, Format::dot)};
}

Outcome cmd_chain_cocycle(Loaded& in) {
  return {emit_table(cocycle_from_chain(in.chain()).table())};
}

Outcome cmd_decompose(Loaded& in, const std::string& by) {
  if (by == "classes") return {decompose_by_classes(in.context()).to_text()};
  const BstarDecomposition d = decompose_by_bstar(in.context());
  return {d.to_text(), d.recombines ? kSuccess : kFailure};
}

Outcome cmd_identity(Loaded& in, const std::string& name, const std::string& base,
                     const std::vector<std::string>& family) {
  const IdentityName id = identity_from_string(name);
  IdentityArgs args;
  if (in.has_chain()) args.chain = in.chain();
  if (!base.empty()) args.base = in.ideal(base);
  for (const auto& f : family) args.family.push_back(in.ideal(f));
  const IdentityResult r = check_identity(id, in.context(), args);
  Outcome o;
  o.text = std::string(to_string(id)) + (r.holds ? " holds" : " fails");
  if (r.counterexample)
    o.text += " at (" + std::to_string(r.counterexample->first) + "," +
              std::to_string(r.counterexample->second) + ")";
  o.text += ": " + r.detail + "\n";
  o.code = r.holds ? kSuccess : kFailure;
  return o;
}

Outcome cmd_morphism(Loaded& in, const std::string& ideal_text) {
  const MorphismReport m = morphism_check(in.ideal(ideal_text));
  auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  Outcome o;
  o.text += "multiplicative=" + flag(m.multiplicative) + "\n";
  o.text += "kernel_phi=" + flag(m.kernel_phi) + "\n";
  o.text += "psi_multiplicative=" + flag(m.psi_multiplicative) + "\n";
  o.text += "kernel_psi=" + flag(m.kernel_psi) + "\n";
  o.text += "section=" + flag(m.section) + "\n";
  o.text += "dimensions=" + std::to_string(m.dim_total) + "=" + std::to_string(m.dim_quotient) + "+" +
            std::to_string(m.dim_ideal) + "\n";
  if (m.first_violation) o.text += "first_violation=" + m.detail + "\n";
  o.code = m.ok() ? kSuccess : kFailure;
  return o;
}

Outcome cmd_lift_r(Loaded& in) { return {emit_r(chain_lift(in.r(), in.chain()))}; }

Outcome cmd_pad_lift(Loaded& in) {
  const PaddedLift p = padded_lift(in.r(), in.chain());
  Outcome o;
  o.text += "# padded chain:";
  for (const auto& i : p.padded.ideals()) o.text += " " + to_string(i.members());
  o.text += "\n# certified=" + std::string(p.certified ? "true" : "false") + "\n";
  o.text += emit_r(p.lifted);
  o.code = p.certified ? kSuccess : kFailure;
  return o;
}

Outcome cmd_search_r(Loaded& in, std::uint64_t bound) {
  const RealizationResult res = search_realization(in.context(), bound);
  if (res.witness) return {emit_r(*res.witness)};
  return {"# no realization over additive naturals with values in [1," + std::to_string(bound) +
              "]; search exhausted\n",
          kFailure};
}

Outcome cmd_census(const Workspace& ws, std::size_t order, bool suite, std::size_t max_chains) {
  CensusConfig cfg;
  if (!ws.group.empty()) {
    Workspace only_group;
    only_group.group = ws.group;
    cfg.group = Loaded(only_group).group();
  } else {
    cfg.group = make_cyclic(order);
  }
  cfg.max_chains = max_chains;
  Outcome o;
  if (suite) {
    const SuiteReport rep = property_suite(cfg);
    o.text = rep.to_text();
    o.code = rep.ok() ? kSuccess : kFailure;
    return o;
  }
  const CocycleCensus census = enumerate_cocycles(cfg);
  for (const auto& f : census.cocycles) o.text += census_record(f) + "\n";
  o.text += "# count=" + std::to_string(census.cocycles.size()) +
            " truncated=" + (census.truncated ? "true" : "false") + "\n";
  return o;
}

void add_common(CLI::App* sub, Workspace& ws) {
  sub->add_option("--group", ws.group, "builtin group (cyclicN, dihedralM) or group file");
  sub->add_option("--cocycle", ws.cocycle, "cocycle table file");
  sub->add_option("--r", ws.r, "semilinear map file");
  sub->add_option("--chain", ws.chain, "ideal chain file");
  sub->add_option("--out", ws.out, "output file, '-' for standard output");
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error:
    case ErrorCode::format_error:
      return kUsage;
    default:
      return kFailure;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idempotent 2-cocycle calculus over finite groups", "cocycle-forge"};
  app.require_subcommand(1);
  Workspace ws;
  std::function<Outcome(Loaded&)> action;
  std::function<Outcome()> standalone;

  auto simple = [&](const char* name, const char* help, Outcome (*fn)(Loaded&)) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, ws);
    sub->callback([&, fn] { action = fn; });
  };
  simple("validate", "validate the group, cocycle, r and chain files", cmd_validate);
  simple("inertial", "print the inertial group H and G*", cmd_inertial);
  simple("radical-powers", "print J, J^2, ... and the nilpotency index", cmd_radical_powers);
  simple("nk", "print the N_k layers", cmd_nk);
  simple("generators", "print the generator words of every element of G*", cmd_generators);
  simple("annihilators", "print trivial and non-trivial annihilators", cmd_annihilators);
  simple("chain-cocycle", "print the cocycle of a descending ideal chain", cmd_chain_cocycle);
  simple("lift-r", "lift r along a chain into a lexicographic product", cmd_lift_r);
  simple("pad-lift", "pad the chain and lift r so that f_r of the lift is the chain cocycle",
         cmd_pad_lift);

  std::string kind;
  auto* graph = app.add_subcommand("graph", "DOT graph of elements or generators");
  add_common(graph, ws);
  graph->add_option("--kind", kind)->required()->check(CLI::IsMember({"element", "generator"}));
  graph->callback([&] { action = [&](Loaded& in) { return cmd_graph(in, kind); }; });

  std::string by;
  auto* decompose = app.add_subcommand("decompose", "decompose f by annihilator classes or B*");
  add_common(decompose, ws);
  decompose->add_option("--by", by)->required()->check(CLI::IsMember({"classes", "bstar"}));
  decompose->callback([&] { action = [&](Loaded& in) { return cmd_decompose(in, by); }; });

  std::string name, base;
  std::vector<std::string> family;
  auto* identity = app.add_subcommand("identity", "check one identity on the given arguments");
  add_common(identity, ws);
  identity->add_option("--name", name)->required();
  identity->add_option("--ideal", base, "base ideal as a member set");
  identity->add_option("--family", family, "family ideals as member sets");
  identity->callback([&] {
    action = [&](Loaded& in) { return cmd_identity(in, name, base, family); };
  });

  std::string ideal_text;
  auto* morphism = app.add_subcommand("morphism", "check the maps A_f -> A_{f_I} -> A_f/I");
  add_common(morphism, ws);
  morphism->add_option("--ideal", ideal_text)->required();
  morphism->callback([&] { action = [&](Loaded& in) { return cmd_morphism(in, ideal_text); }; });

  std::uint64_t bound = 0;
  auto* search = app.add_subcommand("search-r", "search r over additive naturals with f_r = f");
  add_common(search, ws);
  search->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  search->callback([&] { action = [&](Loaded& in) { return cmd_search_r(in, bound); }; });

  std::size_t order = 4;
  std::size_t max_chains = 10'000;
  bool suite = false;
  auto* census = app.add_subcommand("census", "enumerate all cocycles of a small group");
  add_common(census, ws);
  census->add_option("--order", order, "order of the cyclic group when --group is absent")
      ->check(CLI::Range(1, 12));
  census->add_flag("--suite", suite, "run the property suite over the census");
  census->add_option("--max-chains", max_chains, "chain cap per cocycle")->check(CLI::PositiveNumber);
  census->callback([&] { standalone = [&] { return cmd_census(ws, order, suite, max_chains); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Outcome result;
  try {
    if (standalone) {
      result = standalone();
    } else {
      Loaded in(ws);
      result = action(in);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e);
  }

  if (ws.out == "-") {
    out << result.text;
  } else {
    std::ofstream file(ws.out, std::ios::binary);
    if (!file) {
      err << "cannot write '" << ws.out << "'\n";
      return kFailure;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace cocycle_forge::cli
