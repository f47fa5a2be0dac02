#include "cocycle_forge/algebra.hpp"

#include <deque>

#include "cocycle_forge/error.hpp"
#include "internal.hpp"

namespace cocycle_forge {

namespace {

ElementSet product_set(const AlgebraContext& ctx, const ElementSet& a, const ElementSet& b) {
  const Group& g = ctx.group();
  ElementSet out;
  a.for_each([&](Element s) {
    b.for_each([&](Element t) {
      if (ctx.multiplies(s, t)) out.insert(g.mul(s, t));
    });
  });
  return out;
}

}  // namespace

AlgebraContext::AlgebraContext(Cocycle f, Subgroup h)
    : cocycle_(std::move(f)), inertial_(std::move(h)), gstar_(inertial_.complement()) {}

ContextPtr AlgebraContext::make(Cocycle f) {
  Subgroup h = inertial_group(f);
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext(std::move(f), std::move(h)));
  if (ctx->gstar_.empty())
    throw Error(ErrorCode::trivial_radical, "inertial group is the whole group, J = 0");

  ElementSet power = ctx->gstar_;
  while (!power.empty()) {
    ctx->powers_.push_back(power);
    ElementSet next = product_set(*ctx, power, ctx->gstar_);
    ensure(next.is_subset_of(power) && next != power, "radical is not nilpotent");
    power = next;
  }
  for (std::size_t k = 0; k < ctx->powers_.size(); ++k) {
    ElementSet layer = ctx->powers_[k];
    if (k + 1 < ctx->powers_.size()) layer -= ctx->powers_[k + 1];
    ctx->layers_.push_back(layer);
  }
  return ctx;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->cocycle() == b->cocycle();
}

bool is_closed(const AlgebraContext& ctx, const ElementSet& members) {
  if (!members.is_subset_of(ctx.gstar())) return false;
  const Group& g = ctx.group();
  const std::size_t n = g.order();
  bool ok = true;
  members.for_each([&](Element x) {
    if (!ok) return;
    for (Element t = 0; t < n; ++t) {
      if (ctx.multiplies(t, x) && !members.contains(g.mul(t, x))) ok = false;
      if (ctx.multiplies(x, t) && !members.contains(g.mul(x, t))) ok = false;
    }
  });
  return ok;
}

MonomialIdeal assume_ideal(ContextPtr ctx, const ElementSet& members) {
  return MonomialIdeal(std::move(ctx), members);
}

MonomialIdeal MonomialIdeal::from_members(ContextPtr ctx, const ElementSet& members) {
  if (!members.is_subset_of(ctx->gstar()))
    throw Error(ErrorCode::not_in_gstar,
                to_string(members) + " is not contained in G* = " + to_string(ctx->gstar()));
  if (!is_closed(*ctx, members))
    throw Error(ErrorCode::invalid_ideal,
                to_string(members) + " is not closed under basis multiplication");
  return MonomialIdeal(std::move(ctx), members);
}

MonomialIdeal MonomialIdeal::zero(ContextPtr ctx) { return MonomialIdeal(std::move(ctx), {}); }

MonomialIdeal MonomialIdeal::radical(ContextPtr ctx) {
  ElementSet j = ctx->gstar();
  return MonomialIdeal(std::move(ctx), j);
}

MonomialIdeal ideal_closure(const ContextPtr& ctx, const ElementSet& seed) {
  if (!seed.is_subset_of(ctx->gstar()))
    throw Error(ErrorCode::not_in_gstar, to_string(seed) + " meets the inertial group");
  const Group& g = ctx->group();
  const std::size_t n = g.order();
  ElementSet members = seed;
  std::deque<Element> queue;
  seed.for_each([&](Element x) { queue.push_back(x); });
  auto visit = [&](Element y) {
    ensure(!ctx->in_h(y), "basis product of a radical element landed in H");
    if (!members.contains(y)) {
      members.insert(y);
      queue.push_back(y);
    }
  };
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element t = 0; t < n; ++t) {
      if (ctx->multiplies(t, x)) visit(g.mul(t, x));
      if (ctx->multiplies(x, t)) visit(g.mul(x, t));
    }
  }
  return assume_ideal(ctx, members);
}

MonomialIdeal principal_ideal(const ContextPtr& ctx, Element sigma) {
  if (sigma >= ctx->order() || ctx->in_h(sigma))
    throw Error(ErrorCode::not_in_gstar, std::to_string(sigma) + " is not in G*");
  return ideal_closure(ctx, ElementSet{sigma});
}

RadicalPowers radical_powers(const ContextPtr& ctx) {
  RadicalPowers out;
  for (const auto& p : ctx->radical_power_sets()) out.powers.push_back(assume_ideal(ctx, p));
  out.nilpotency = out.powers.size() + 1;
  return out;
}

std::vector<ElementSet> nk_partition(const AlgebraContext& ctx) {
  // Cross-check N_1 against the factorization characterization.
  const Group& g = ctx.group();
  ElementSet n1 = ctx.gstar();
  ctx.gstar().for_each([&](Element a) {
    ctx.gstar().for_each([&](Element b) {
      if (ctx.multiplies(a, b)) n1.erase(g.mul(a, b));
    });
  });
  ensure(n1 == ctx.n1(), "N_1 disagrees with its factorization characterization");
  return ctx.layers();
}

ElementSet annihilators(const AlgebraContext& ctx) {
  ElementSet out;
  ctx.gstar().for_each([&](Element s) {
    bool kills = true;
    ctx.gstar().for_each([&](Element t) {
      if (ctx.multiplies(s, t) || ctx.multiplies(t, s)) kills = false;
    });
    if (kills) out.insert(s);
  });
  return out;
}

AnnihilatorClasses classify_annihilators(const AlgebraContext& ctx) {
  AnnihilatorClasses out;
  const ElementSet ann = annihilators(ctx);
  out.trivial = ann & ctx.n1();
  out.nontrivial = ann - ctx.n1();
  ElementSet seen;
  ann.for_each([&](Element s) {
    const ElementSet cls = double_coset(ctx.inertial(), s);
    ensure(cls.is_subset_of(ann), "annihilator set is not a union of HσH classes");
    if (out.nontrivial.contains(s) && !seen.contains(s)) {
      out.nontrivial_representatives.push_back(s);
      seen |= cls;
    }
  });
  return out;
}

MonomialIdeal ideal_lattice_op(LatticeOp kind, const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_context(a.context(), b.context()))
    throw Error(ErrorCode::context_mismatch, "ideals belong to different algebras");
  const auto& ctx = a.context();
  switch (kind) {
    case LatticeOp::sum:
      return assume_ideal(ctx, a.members() | b.members());
    case LatticeOp::intersection:
      return assume_ideal(ctx, a.members() & b.members());
    case LatticeOp::product: {
      ElementSet p = product_set(*ctx, a.members(), b.members());
      ensure(is_closed(*ctx, p), "product of two-sided ideals is not closed");
      return assume_ideal(ctx, p);
    }
  }
  throw Error(ErrorCode::internal, "unknown lattice operation");
}

MonomialIdeal ideal_power(const MonomialIdeal& a, std::size_t e) {
  if (e == 0) throw Error(ErrorCode::precondition, "ideal power with exponent 0");
  MonomialIdeal out = a;
  for (std::size_t i = 1; i < e; ++i) out = ideal_product(out, a);
  return out;
}

DescendingChain::DescendingChain(std::vector<MonomialIdeal> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.size() < 2)
    throw Error(ErrorCode::chain_too_short,
                "a chain needs at least 2 ideals, got " + std::to_string(ideals_.size()));
  for (std::size_t i = 1; i < ideals_.size(); ++i) {
    if (!same_context(ideals_[i].context(), ideals_[0].context()))
      throw Error(ErrorCode::context_mismatch, "chain mixes algebras");
    if (!ideals_[i].is_subset_of(ideals_[i - 1]))
      throw Error(ErrorCode::invalid_chain, "ideal " + std::to_string(i + 1) + " " +
                                                to_string(ideals_[i].members()) +
                                                " is not contained in ideal " + std::to_string(i) +
                                                " " + to_string(ideals_[i - 1].members()));
  }
}

std::size_t DescendingChain::level_or_zero(Element sigma) const noexcept {
  std::size_t level = 0;
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (!ideals_[i].contains(sigma)) break;
    level = i + 1;
  }
  return level;
}

std::size_t chain_level(const DescendingChain& chain, Element sigma) {
  const std::size_t s = chain.level_or_zero(sigma);
  if (s == 0)
    throw Error(ErrorCode::undefined_level, std::to_string(sigma) + " is not in the first ideal");
  return s;
}

}  // namespace cocycle_forge
