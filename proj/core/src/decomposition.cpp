#include "cocycle_forge/decomposition.hpp"

#include "cocycle_forge/error.hpp"
#include "internal.hpp"

namespace cocycle_forge {

BinaryTable chain_table(const DescendingChain& chain) {
  const AlgebraContext& ctx = *chain.context();
  const Group& g = ctx.group();
  const std::size_t n = g.order();
  const std::size_t k = chain.length();
  std::vector<std::size_t> level(n, 0);
  for (Element s = 0; s < n; ++s) level[s] = chain.level_or_zero(s);

  BinaryTable t(ctx.group_ptr(), false);
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u) {
      if (ctx.in_h(s) || ctx.in_h(u)) {
        t.set(s, u, true);
        continue;
      }
      if (!ctx.multiplies(s, u)) continue;
      const std::size_t a = level[s];
      if (a >= 1 && a <= k - 1 && level[u] == a && level[g.mul(s, u)] == a) t.set(s, u, true);
    }
  return t;
}

namespace {

Cocycle validated_same_h(const AlgebraContext& ctx, const BinaryTable& t, const char* what) {
  auto check = validate_cocycle(t);
  if (!check)
    throw Error(ErrorCode::internal, std::string(what) + " is not a cocycle: " +
                                         check.violation->describe());
  ensure(inertial_group(*check.cocycle) == ctx.inertial(), "construction changed the inertial group");
  return std::move(*check.cocycle);
}

}  // namespace

Cocycle cocycle_from_chain(const DescendingChain& chain) {
  return validated_same_h(*chain.context(), chain_table(chain), "chain cocycle");
}

Cocycle f_sub_I(const MonomialIdeal& ideal) {
  const AlgebraContext& ctx = *ideal.context();
  const Group& g = ctx.group();
  const std::size_t n = g.order();
  BinaryTable t(ctx.group_ptr(), false);
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u) {
      if (ctx.in_h(s) || ctx.in_h(u))
        t.set(s, u, true);
      else if (ctx.multiplies(s, u) && !ideal.contains(g.mul(s, u)))
        t.set(s, u, true);
    }
  return validated_same_h(ctx, t, "f_I");
}

MonomialIdeal unique_class_ideal(const ContextPtr& ctx, Element rho) {
  if (rho >= ctx->order() || ctx->in_h(rho))
    throw Error(ErrorCode::not_in_gstar, std::to_string(rho) + " is not in G*");
  if (ctx->n1().contains(rho))
    throw Error(ErrorCode::rho_in_n1, std::to_string(rho) + " lies in N_1");
  ElementSet members;
  ctx->gstar().for_each([&](Element s) {
    const MonomialIdeal is = principal_ideal(ctx, s);
    if (!is.contains(rho)) members |= is.members();
  });
  return assume_ideal(ctx, members);
}

std::vector<Element> nontrivial_annihilator_classes(const AlgebraContext& ctx) {
  return classify_annihilators(ctx).nontrivial_representatives;
}

DecompositionReport decompose_by_classes(const ContextPtr& ctx) {
  const auto& powers = ctx->radical_power_sets();
  if (powers.size() < 2)
    throw Error(ErrorCode::nothing_to_decompose, "f equals the Waterhouse idempotent");
  const ElementSet& j2 = powers[1];

  DecompositionReport report;
  // J^t with t ≥ 2 consists of non-trivial annihilators, so there is at least one class.
  const auto annihilator_reps = nontrivial_annihilator_classes(*ctx);
  ensure(!annihilator_reps.empty(), "J^2 is nonzero but there is no non-trivial annihilator");
  if (annihilator_reps.size() == 1) {
    report.unique_class = annihilator_reps.front();
    report.recombines = true;
    return report;
  }

  std::vector<Element> reps;
  ElementSet seen;
  j2.for_each([&](Element s) {
    if (seen.contains(s)) return;
    reps.push_back(s);
    seen |= double_coset(ctx->inertial(), s);
  });

  const Cocycle f0 = waterhouse(ctx->inertial());
  std::vector<BinaryTable> tables;
  for (Element rho : reps) {
    MonomialIdeal ideal = unique_class_ideal(ctx, rho);
    Cocycle part = f_sub_I(ideal);
    const bool strict = compare(f0, part) == Ordering::less &&
                        compare(part, ctx->cocycle()) == Ordering::less;
    const auto part_ctx = AlgebraContext::make(part);
    const auto classes = nontrivial_annihilator_classes(*part_ctx);
    const bool unique = classes.size() == 1 &&
                        double_coset(ctx->inertial(), rho).contains(classes.front());
    tables.push_back(part.table());
    report.parts.push_back(DecompositionPart{rho, std::move(ideal), std::move(part), strict, unique});
  }
  report.recombines = vee(tables) == ctx->cocycle().table();
  return report;
}

std::string DecompositionReport::to_text() const {
  std::string out;
  if (unique_class) {
    out += "unique_class=" + std::to_string(*unique_class) + "\n";
    return out;
  }
  for (const auto& p : parts)
    out += "rho=" + std::to_string(p.rho) + " ideal=" + to_string(p.ideal.members()) +
           " strict=" + (p.strict ? "true" : "false") + "\n";
  out += std::string("recombines=") + (recombines ? "true" : "false") + "\n";
  return out;
}

BstarDecomposition decompose_by_bstar(const ContextPtr& ctx) {
  const GeneratorSet gens = all_generators(ctx);
  const auto words = bstar(gens);
  const auto zero = MonomialIdeal::zero(ctx);
  const auto radical = MonomialIdeal::radical(ctx);

  std::vector<BstarPart> parts;
  std::vector<BinaryTable> tables;
  for (const Word& w : words) {
    MonomialIdeal ideal = ideal_of_word(ctx, w);
    Cocycle part = cocycle_from_chain(DescendingChain({radical, ideal, zero}));
    tables.push_back(part.table());
    parts.push_back(BstarPart{w, std::move(ideal), std::move(part)});
  }
  BinaryTable join = tables.empty() ? waterhouse(ctx->inertial()).table() : vee(tables);
  const bool recombines = join == ctx->cocycle().table();
  return BstarDecomposition{std::move(parts), std::move(join), recombines};
}

std::string BstarDecomposition::to_text() const {
  std::string out;
  std::vector<bool> done(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (done[i]) continue;
    const Group& g = parts[i].cocycle.group();
    std::vector<Word> ws;
    for (std::size_t j = i; j < parts.size(); ++j)
      if (!done[j] && parts[j].ideal == parts[i].ideal) {
        ws.push_back(parts[j].gamma);
        done[j] = true;
      }
    const auto part_ctx = AlgebraContext::make(parts[i].cocycle);
    out += "words=" + format_word_set(g, ws) + " ideal=" + to_string(parts[i].ideal.members()) +
           " generators=" + format_catalog(all_generators(part_ctx)) + "\n";
  }
  out += std::string("recombines=") + (recombines ? "true" : "false") + "\n";
  return out;
}

}  // namespace cocycle_forge
