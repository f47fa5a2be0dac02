#include "cocycle_forge/semilinear.hpp"

#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/error.hpp"
#include "internal.hpp"

namespace cocycle_forge {

ElementSet SemilinearMap::neutral_set() const {
  ElementSet out;
  for (Element s = 0; s < values_.size(); ++s)
    if (monoid_->is_neutral(values_[s])) out.insert(s);
  return out;
}

std::string RViolation::describe() const {
  switch (kind) {
    case Kind::length:
      return "value count does not match the group order";
    case Kind::width:
      return "value " + std::to_string(sigma) + " has the wrong number of components";
    case Kind::identity_not_neutral:
      return "r(identity) is not neutral";
    case Kind::subadditivity:
      return "r(st) > r(s)r(t) at (" + std::to_string(sigma) + "," + std::to_string(tau) + ")";
    case Kind::neutral_not_subgroup:
      return "M_r is not closed: (" + std::to_string(sigma) + "," + std::to_string(tau) + ")";
  }
  return "unknown violation";
}

RCheck validate_r(GroupPtr group, MonoidPtr monoid, std::vector<MonoidValue> values) {
  RCheck out;
  const Group& g = *group;
  const std::size_t n = g.order();
  auto fail = [&](RViolation::Kind k, Element s, Element t) {
    out.violation = RViolation{k, s, t};
    return out;
  };
  if (values.size() != n) return fail(RViolation::Kind::length, 0, 0);
  for (Element s = 0; s < n; ++s)
    if (values[s].size() != monoid->width()) return fail(RViolation::Kind::width, s, 0);
  if (!monoid->is_neutral(values[0])) return fail(RViolation::Kind::identity_not_neutral, 0, 0);
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t)
      if (monoid->less(monoid->op(values[s], values[t]), values[g.mul(s, t)]))
        return fail(RViolation::Kind::subadditivity, s, t);
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t)
      if (monoid->is_neutral(values[s]) && monoid->is_neutral(values[t]) &&
          !monoid->is_neutral(values[g.mul(s, t)]))
        return fail(RViolation::Kind::neutral_not_subgroup, s, t);
  out.map = SemilinearMap(std::move(group), std::move(monoid), std::move(values));
  return out;
}

SemilinearMap require_r(GroupPtr group, MonoidPtr monoid, std::vector<MonoidValue> values) {
  auto check = validate_r(std::move(group), std::move(monoid), std::move(values));
  if (!check) throw Error(ErrorCode::invalid_r, check.violation->describe());
  return std::move(*check.map);
}

SemilinearMap naturals_r(GroupPtr group, const std::vector<std::uint64_t>& values) {
  std::vector<MonoidValue> vs;
  vs.reserve(values.size());
  for (auto v : values) vs.push_back({v});
  return require_r(std::move(group), additive_naturals(), std::move(vs));
}

Cocycle cocycle_from_r(const SemilinearMap& r) {
  const Group& g = r.group();
  const OrderedMonoid& m = *r.monoid();
  const std::size_t n = g.order();
  BinaryTable t(r.group_ptr(), false);
  for (Element s = 0; s < n; ++s)
    for (Element u = 0; u < n; ++u)
      t.set(s, u, m.compare(r(g.mul(s, u)), m.op(r(s), r(u))) == 0);
  Cocycle f = require_cocycle(t);
  ensure(inertial_group(f).members() == r.neutral_set(), "inertial group of f_r differs from M_r");
  return f;
}

SemilinearMap chain_lift(const SemilinearMap& r, const DescendingChain& chain) {
  if (!(cocycle_from_r(r) == chain.context()->cocycle()))
    throw Error(ErrorCode::context_mismatch, "the chain does not live over f_r");
  const std::size_t k = chain.length();
  const OrderedMonoid& m = *r.monoid();
  const MonoidValue e = m.neutral();
  std::vector<MonoidValue> values;
  for (Element s = 0; s < r.group().order(); ++s) {
    const std::size_t a = chain.level_or_zero(s);
    MonoidValue v;
    for (std::size_t i = 0; i < k - a + 1; ++i) v.insert(v.end(), r(s).begin(), r(s).end());
    for (std::size_t i = 0; i < a; ++i) v.insert(v.end(), e.begin(), e.end());
    values.push_back(std::move(v));
  }
  SemilinearMap out = require_r(r.group_ptr(), lex_power(r.monoid(), k + 1), std::move(values));
  ensure(out.neutral_set() == r.neutral_set(), "lift changed the neutral subgroup");
  return out;
}

DescendingChain pad_chain(const DescendingChain& chain) {
  const ContextPtr& ctx = chain.context();
  const auto& ideals = chain.ideals();
  const MonomialIdeal radical = MonomialIdeal::radical(ctx);
  const MonomialIdeal& first = ideals.front();
  const MonomialIdeal& last = ideals.back();

  std::vector<MonomialIdeal> out;
  auto push = [&](const MonomialIdeal& i) {
    if (out.empty() || !(out.back() == i)) out.push_back(i);
  };
  if (!(first == radical)) {
    push(radical);
    // J^{2^i} + I_1 until J^{2^i} ⊆ I_1.
    MonomialIdeal p = ideal_product(radical, radical);
    while (!p.is_subset_of(first)) {
      push(ideal_sum(p, first));
      p = ideal_product(p, p);
    }
  }
  for (const auto& i : ideals) push(i);
  if (!last.empty()) {
    MonomialIdeal p = ideal_product(last, last);
    while (!p.empty()) {
      push(p);
      p = ideal_product(p, p);
    }
    push(MonomialIdeal::zero(ctx));
  }
  return DescendingChain(std::move(out));
}

PaddedLift padded_lift(const SemilinearMap& r, const DescendingChain& chain) {
  DescendingChain padded = pad_chain(chain);
  SemilinearMap lifted = chain_lift(r, padded);
  const bool certified = cocycle_from_r(lifted).table() == chain_table(chain);
  return PaddedLift{std::move(padded), std::move(lifted), certified};
}

}  // namespace cocycle_forge
