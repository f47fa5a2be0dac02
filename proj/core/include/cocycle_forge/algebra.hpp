#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocycle_forge/cocycle.hpp"

namespace cocycle_forge {

class AlgebraContext;
using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// The weak crossed product algebra A_f seen through its basis: the cocycle,
/// its inertial group H, the radical support G* = G \ H, the radical powers
/// and the N_k layers. Everything is computed once at construction.
class AlgebraContext {
 public:
  /// Throws Error(trivial_radical) when H = G (A_f is simple, J = 0).
  static ContextPtr make(Cocycle f);

  const Cocycle& cocycle() const noexcept { return cocycle_; }
  const Group& group() const noexcept { return cocycle_.group(); }
  const GroupPtr& group_ptr() const noexcept { return cocycle_.group_ptr(); }
  std::size_t order() const noexcept { return cocycle_.order(); }
  const Subgroup& inertial() const noexcept { return inertial_; }
  const ElementSet& gstar() const noexcept { return gstar_; }
  bool in_h(Element x) const noexcept { return inertial_.contains(x); }

  /// J^1, ..., J^t as member sets (J^{t+1} = 0).
  const std::vector<ElementSet>& radical_power_sets() const noexcept { return powers_; }
  /// N_1, ..., N_t.
  const std::vector<ElementSet>& layers() const noexcept { return layers_; }
  const ElementSet& n1() const noexcept { return layers_.front(); }
  /// t, the index of the last nonzero power of J.
  std::size_t depth() const noexcept { return powers_.size(); }

  /// x_a x_b ≠ 0.
  bool multiplies(Element a, Element b) const noexcept { return cocycle_(a, b); }

 private:
  AlgebraContext(Cocycle f, Subgroup h);
  Cocycle cocycle_;
  Subgroup inertial_;
  ElementSet gstar_;
  std::vector<ElementSet> powers_;
  std::vector<ElementSet> layers_;
};

/// Same pointer, or contexts over equal cocycle tables.
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// A two-sided ideal of A_f contained in J, stored as the set of σ ∈ G* with
/// x_σ in the ideal. The zero ideal is the empty set.
class MonomialIdeal {
 public:
  /// Validates closure under left and right basis multiplication.
  /// Throws Error(not_in_gstar) or Error(invalid_ideal).
  static MonomialIdeal from_members(ContextPtr ctx, const ElementSet& members);
  static MonomialIdeal zero(ContextPtr ctx);
  static MonomialIdeal radical(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_subset_of(const MonomialIdeal& o) const noexcept {
    return members_.is_subset_of(o.members_);
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.members_ == b.members_ && same_context(a.ctx_, b.ctx_);
  }

 private:
  friend MonomialIdeal assume_ideal(ContextPtr, const ElementSet&);
  MonomialIdeal(ContextPtr ctx, const ElementSet& members)
      : ctx_(std::move(ctx)), members_(members) {}
  ContextPtr ctx_;
  ElementSet members_;
};

/// True when `members` ⊆ G* is closed under multiplication by basis elements.
bool is_closed(const AlgebraContext& ctx, const ElementSet& members);

/// I_σ, the ideal generated by x_σ, by breadth-first closure.
/// Throws Error(not_in_gstar) for σ ∈ H.
MonomialIdeal principal_ideal(const ContextPtr& ctx, Element sigma);

/// Smallest ideal containing the seed, i.e. Σ_{σ ∈ seed} I_σ.
MonomialIdeal ideal_closure(const ContextPtr& ctx, const ElementSet& seed);

struct RadicalPowers {
  std::vector<MonomialIdeal> powers;  // J^1 .. J^t
  std::size_t nilpotency = 0;         // t + 1
};
RadicalPowers radical_powers(const ContextPtr& ctx);

/// N_k = J^k \ J^{k+1}, k = 1..t.
std::vector<ElementSet> nk_partition(const AlgebraContext& ctx);

/// σ ∈ G* with f(σ,τ) = f(τ,σ) = 0 for every τ ∈ G*.
ElementSet annihilators(const AlgebraContext& ctx);

struct AnnihilatorClasses {
  ElementSet trivial;      // annihilators in N_1
  ElementSet nontrivial;   // annihilators outside N_1
  std::vector<Element> nontrivial_representatives;  // least member of each HσH class
};
AnnihilatorClasses classify_annihilators(const AlgebraContext& ctx);

enum class LatticeOp { sum, intersection, product };

/// Sum and intersection are set union / intersection; product is
/// {στ : σ ∈ a, τ ∈ b, f(σ,τ) = 1}. Throws Error(context_mismatch).
MonomialIdeal ideal_lattice_op(LatticeOp kind, const MonomialIdeal& a, const MonomialIdeal& b);

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_lattice_op(LatticeOp::sum, a, b);
}
inline MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_lattice_op(LatticeOp::intersection, a, b);
}
inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_lattice_op(LatticeOp::product, a, b);
}
/// a^e for e ≥ 1.
MonomialIdeal ideal_power(const MonomialIdeal& a, std::size_t e);

/// I_1 ⊇ I_2 ⊇ ... ⊇ I_k, k ≥ 2, over one context.
class DescendingChain {
 public:
  /// Throws Error(chain_too_short) for k < 2, Error(context_mismatch), or
  /// Error(invalid_chain) naming the first failed containment.
  explicit DescendingChain(std::vector<MonomialIdeal> ideals);

  const ContextPtr& context() const noexcept { return ideals_.front().context(); }
  std::size_t length() const noexcept { return ideals_.size(); }
  const MonomialIdeal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<MonomialIdeal>& ideals() const noexcept { return ideals_; }

  /// s(σ) = max{a : σ ∈ I_a}, 1-based; 0 when σ ∉ I_1.
  std::size_t level_or_zero(Element sigma) const noexcept;

  friend bool operator==(const DescendingChain& a, const DescendingChain& b) {
    return a.ideals_ == b.ideals_;
  }

 private:
  std::vector<MonomialIdeal> ideals_;
};

/// s(σ); throws Error(undefined_level) for σ ∉ I_1.
std::size_t chain_level(const DescendingChain& chain, Element sigma);

}  // namespace cocycle_forge
