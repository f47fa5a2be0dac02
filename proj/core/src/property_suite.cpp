#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/error.hpp"
#include "cocycle_forge/generators.hpp"
#include "cocycle_forge/oracle.hpp"

namespace cocycle_forge {

namespace {

std::string table_rows(const BinaryTable& t) {
  std::string out;
  for (Element s = 0; s < t.order(); ++s) {
    if (s > 0) out += '/';
    for (Element u = 0; u < t.order(); ++u) out += t(s, u) ? '1' : '0';
  }
  return out;
}

std::string chain_text(const DescendingChain& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i > 0) out += ',';
    out += to_string(c[i].members());
  }
  return out + "]";
}

std::string cell(const std::optional<std::pair<Element, Element>>& at) {
  if (!at) return "";
  return " at (" + std::to_string(at->first) + "," + std::to_string(at->second) + ")";
}

class CocycleChecker {
 public:
  CocycleChecker(const Cocycle& f, SuiteReport& rep) : f_(f), rep_(rep), tag_(census_record(f)) {}

  void run(std::size_t max_chains, std::size_t max_len) {
    rep_.cocycles = 1;
    try {
      ctx_ = AlgebraContext::make(f_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::trivial_radical) throw;
      record("trivial_radical_is_all_ones", f_ == trivial_cocycle(f_.group_ptr()), "");
      return;
    }
    generators();
    ideals_ = enumerate_ideals(ctx_);
    rep_.ideals = ideals_.size();
    for (const auto& i : ideals_) per_ideal(i);
    lattice();
    decompositions();
    const ChainCensus chains = enumerate_chains(ideals_, max_len, max_chains);
    rep_.truncated = chains.truncated;
    rep_.chains = chains.chains.size();
    for (const auto& c : chains.chains) per_chain(c);
  }

 private:
  void record(const std::string& name, bool ok, const std::string& where) {
    rep_.record(name, ok, ok ? std::string() : tag_ + " " + where);
  }

  void identity(IdentityName name, const IdentityArgs& args, const std::string& where) {
    try {
      const IdentityResult r = check_identity(name, ctx_, args);
      record(std::string(to_string(name)), r.holds, where + cell(r.counterexample) + " " + r.detail);
    } catch (const Error& e) {
      record(std::string(to_string(name)), false, where + " threw " + e.what());
    }
  }

  void generators() {
    const GeneratorSet gens = all_generators(ctx_);
    ctx_->gstar().for_each([&](Element s) {
      record("principal_ideal_from_words",
             principal_members_from_words(gens, s) == principal_ideal(ctx_, s).members(),
             "sigma=" + std::to_string(s));
    });
  }

  void per_ideal(const MonomialIdeal& ideal) {
    const std::string where = "I=" + to_string(ideal.members());
    const Cocycle fi = f_sub_I(ideal);
    const ContextPtr ctx_i = AlgebraContext::make(fi);
    record("n1_of_f_I", ctx_i->n1() == (ctx_->n1() | ideal.members()), where);
    record("ideal_is_trivial_annihilators_of_f_I",
           ideal.members().is_subset_of(classify_annihilators(*ctx_i).trivial), where);
    record("f_I_below_f", leq(fi.table(), f_.table()), where);
    identity(IdentityName::fI_eq_f, IdentityArgs{std::nullopt, ideal, {}}, where);

    const MorphismReport m = morphism_check(ideal);
    record("morphism", m.ok(), where + cell(m.first_violation) + " " + m.detail);

    for (const auto& p : enumerate_ideals(ctx_i)) {
      const TransportCertificate c = quotient_transport(ideal, p.members());
      record("quotient_transport", c.tables_equal && c.kernel_matches,
             where + " P=" + to_string(p.members()));
    }
  }

  void lattice() {
    const ElementSet trivial = classify_annihilators(*ctx_).trivial;
    for (const auto& base : ideals_) {
      for (std::size_t a = 0; a < ideals_.size(); ++a) {
        const auto& ia = ideals_[a];
        if (!ia.is_subset_of(base)) continue;
        const std::string where = "I=" + to_string(base.members()) + " I1=" + to_string(ia.members());
        if (ia.members().is_subset_of(trivial))
          identity(IdentityName::trivial_annih_replace, IdentityArgs{std::nullopt, base, {ia}}, where);
        for (std::size_t b = a; b < ideals_.size(); ++b) {
          const auto& ib = ideals_[b];
          if (!ib.is_subset_of(base)) continue;
          const IdentityArgs args{std::nullopt, base, {ia, ib}};
          const std::string w2 = where + " I2=" + to_string(ib.members());
          identity(IdentityName::sum_product, args, w2);
          identity(IdentityName::intersection_vee, args, w2);
        }
      }
    }
    for (std::size_t a = 0; a < ideals_.size(); ++a)
      for (std::size_t b = a; b < ideals_.size(); ++b)
        if (!ideals_[a].members().intersects(ideals_[b].members()))
          identity(IdentityName::cap_zero, IdentityArgs{std::nullopt, std::nullopt, {ideals_[a], ideals_[b]}},
                   "I1=" + to_string(ideals_[a].members()) + " I2=" + to_string(ideals_[b].members()));
  }

  void decompositions() {
    if (ctx_->depth() >= 2) {
      const DecompositionReport d = decompose_by_classes(ctx_);
      if (d.unique_class) {
        record("unique_class_verdict", nontrivial_annihilator_classes(*ctx_).size() == 1, "");
      } else {
        const AnnihilatorClasses ann = classify_annihilators(*ctx_);
        std::vector<MonomialIdeal> family;
        ElementSet meet = ctx_->gstar();
        for (const auto& p : d.parts) {
          const std::string where = "rho=" + std::to_string(p.rho);
          record("class_part_strict", p.strict, where);
          record("class_part_unique_class", p.unique_class, where);
          record("class_ideal_excludes_own_rho", !p.ideal.contains(p.rho), where);
          // Distinct annihilator classes generate ideals that miss each other.
          for (const auto& q : d.parts)
            if (q.rho != p.rho && ann.nontrivial.contains(q.rho))
              record("class_ideal_contains_other_annihilator", p.ideal.contains(q.rho),
                     where + " other=" + std::to_string(q.rho));
          family.push_back(p.ideal);
          meet &= p.ideal.members();
        }
        record("class_recombination", d.recombines, "");
        if (meet.empty())
          identity(IdentityName::cap_zero, IdentityArgs{std::nullopt, std::nullopt, family}, "class ideals");
        else
          record("class_ideals_meet_in_trivial_annihilators", meet.is_subset_of(ann.trivial),
                 "meet=" + to_string(meet));
      }
    }
    const BstarDecomposition b = decompose_by_bstar(ctx_);
    record("bstar_recombination", b.recombines, cell(first_difference(b.join, f_.table())));
  }

  void per_chain(const DescendingChain& chain) {
    const std::string where = "chain=" + chain_text(chain);
    const BinaryTable t = chain_table(chain);
    const CocycleCheck check = validate_cocycle(t);
    bool valid = static_cast<bool>(check);
    std::string why = valid ? "" : check.violation->describe();
    if (valid && !(inertial_group(*check.cocycle) == ctx_->inertial())) {
      valid = false;
      why = "inertial group changed";
    }
    record("chain_cocycle_valid", valid, where + " " + why);
    const IdentityArgs args{chain, std::nullopt, {}};
    identity(IdentityName::leq_f, args, where);
    identity(IdentityName::chain_break, args, where);
    identity(IdentityName::waterhouse_iff, args, where);
    record("chain_transport", chain_transport(chain), where);
  }

  const Cocycle& f_;
  SuiteReport& rep_;
  std::string tag_;
  ContextPtr ctx_;
  std::vector<MonomialIdeal> ideals_;
};

}  // namespace

SuiteReport check_cocycle(const Cocycle& f, std::size_t max_chains, std::size_t max_chain_length) {
  SuiteReport rep;
  CocycleChecker(f, rep).run(max_chains, max_chain_length);
  return rep;
}

SuiteReport check_lift(const SemilinearMap& r, const DescendingChain& chain) {
  SuiteReport rep;
  const Cocycle fr = cocycle_from_r(r);
  const std::string where = census_record(fr) + " chain=" + chain_text(chain);
  const BinaryTable fi = chain_table(chain);
  const SemilinearMap lifted = chain_lift(r, chain);
  const Cocycle fl = cocycle_from_r(lifted);
  rep.record("lift_sandwich", leq(fi, fl.table()) && leq(fl.table(), fr.table()), where);
  rep.record("lift_keeps_neutral_subgroup", lifted.neutral_set() == r.neutral_set(), where);

  const ContextPtr& ctx = chain.context();
  std::vector<MonomialIdeal> ends;
  const auto radical = MonomialIdeal::radical(ctx);
  if (!(chain[0] == radical)) ends.push_back(radical);
  for (const auto& i : chain.ideals()) ends.push_back(i);
  if (!chain[chain.length() - 1].empty()) ends.push_back(MonomialIdeal::zero(ctx));
  const DescendingChain closed(std::move(ends));
  const Cocycle fc = cocycle_from_r(chain_lift(r, closed));
  rep.record("lift_equality_with_endpoints", fc.table() == chain_table(closed),
             where + cell(first_difference(fc.table(), chain_table(closed))));
  rep.record("padded_lift_certified", padded_lift(r, chain).certified, where);
  rep.chains = 1;
  return rep;
}

std::string census_record(const Cocycle& f) {
  std::string out = "n=" + std::to_string(f.order()) + " table=" + table_rows(f.table());
  const Subgroup h = inertial_group(f);
  out += " H=" + to_string(h.members());
  if (h.size() == f.order()) return out + " t=0 N=[] classes=0";
  const ContextPtr ctx = AlgebraContext::make(f);
  out += " t=" + std::to_string(ctx->depth()) + " N=[";
  for (std::size_t i = 0; i < ctx->layers().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ctx->layers()[i].size());
  }
  out += "] classes=" + std::to_string(classify_annihilators(*ctx).nontrivial_representatives.size());
  return out;
}

}  // namespace cocycle_forge
