#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocycle_forge/algebra.hpp"

namespace cocycle_forge {

/// A monoid element as a flat vector of natural components. AdditiveNaturals
/// uses one component; a lex product concatenates its factors.
using MonoidValue = std::vector<std::uint64_t>;

/// Totally ordered monoid whose neutral element is the minimum. Implementations
/// must be associative and strictly translation compatible.
class OrderedMonoid {
 public:
  virtual ~OrderedMonoid() = default;

  /// Number of natural components in each value.
  virtual std::size_t width() const noexcept = 0;
  virtual MonoidValue neutral() const = 0;
  virtual MonoidValue op(const MonoidValue& a, const MonoidValue& b) const = 0;
  /// Negative, zero or positive as a < b, a = b, a > b.
  virtual int compare(const MonoidValue& a, const MonoidValue& b) const = 0;
  /// "5" for naturals, "(2,2,0,0)" for lex products of naturals.
  virtual std::string format(const MonoidValue& v) const = 0;
  virtual std::string describe() const = 0;

  bool less(const MonoidValue& a, const MonoidValue& b) const { return compare(a, b) < 0; }
  bool is_neutral(const MonoidValue& a) const { return compare(a, neutral()) == 0; }
};

using MonoidPtr = std::shared_ptr<const OrderedMonoid>;

/// (ℕ, +, ≤) with neutral 0.
MonoidPtr additive_naturals();
/// Ω₁ × … × Ω_k ordered lexicographically, operation componentwise.
MonoidPtr lex_product(std::vector<MonoidPtr> factors);
/// Ω^k.
MonoidPtr lex_power(const MonoidPtr& base, std::size_t k);

/// First failure among neutral-minimum, associativity and strict translation
/// compatibility on the given sample values, or nullopt.
std::optional<std::string> check_monoid_axioms(const OrderedMonoid& m,
                                               const std::vector<MonoidValue>& samples);

struct RCheck;

/// r : G → Ω with r(1) neutral and r(στ) ≤ r(σ)r(τ).
class SemilinearMap {
 public:
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Group& group() const noexcept { return *group_; }
  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const std::vector<MonoidValue>& values() const noexcept { return values_; }
  const MonoidValue& operator()(Element s) const { return values_.at(s); }
  /// M_r = {σ : r(σ) neutral}.
  ElementSet neutral_set() const;

  friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
    return same_group(a.group_, b.group_) && a.values_ == b.values_ &&
           a.monoid_->describe() == b.monoid_->describe();
  }

 private:
  friend RCheck validate_r(GroupPtr, MonoidPtr, std::vector<MonoidValue>);
  SemilinearMap(GroupPtr g, MonoidPtr m, std::vector<MonoidValue> v)
      : group_(std::move(g)), monoid_(std::move(m)), values_(std::move(v)) {}
  GroupPtr group_;
  MonoidPtr monoid_;
  std::vector<MonoidValue> values_;
};

struct RViolation {
  enum class Kind { length, width, identity_not_neutral, subadditivity, neutral_not_subgroup };
  Kind kind;
  Element sigma = 0;
  Element tau = 0;
  std::string describe() const;
};

struct RCheck {
  std::optional<SemilinearMap> map;
  std::optional<RViolation> violation;
  explicit operator bool() const noexcept { return map.has_value(); }
};

/// Checks length, component width, r(1) neutral, subadditivity on all pairs
/// (first failing pair in row-major order) and closure of M_r.
RCheck validate_r(GroupPtr group, MonoidPtr monoid, std::vector<MonoidValue> values);
/// validate_r, throwing Error(invalid_r).
SemilinearMap require_r(GroupPtr group, MonoidPtr monoid, std::vector<MonoidValue> values);
/// Convenience for naturals.
SemilinearMap naturals_r(GroupPtr group, const std::vector<std::uint64_t>& values);

/// f_r(σ,τ) = 1 iff r(στ) = r(σ)r(τ). Validated; inertial group equals M_r.
Cocycle cocycle_from_r(const SemilinearMap& r);

/// r_𝐈 into Ω^{k+1}: with a = s(σ) (0 outside I_1), r(σ) repeated k−a+1
/// times followed by a neutral components. Throws Error(context_mismatch)
/// unless f_r is the chain's cocycle.
SemilinearMap chain_lift(const SemilinearMap& r, const DescendingChain& chain);

struct PaddedLift {
  DescendingChain padded;
  SemilinearMap lifted;  // chain_lift over the padded chain
  bool certified = false;  // (f_r)_𝐈 = f_{r'} for the original chain
};

/// {J, J²+I₁, …, J^{2^{a−1}}+I₁, I₁, …, I_k, I_k², …, I_k^{2^{b−1}}, ∅} with a,
/// b minimal such that J^{2^a} ⊆ I₁ and I_k^{2^b} = ∅; terms that repeat
/// their predecessor are dropped.
DescendingChain pad_chain(const DescendingChain& chain);
PaddedLift padded_lift(const SemilinearMap& r, const DescendingChain& chain);

struct RealizationResult {
  std::optional<SemilinearMap> witness;  // lexicographically least
  std::uint64_t bound = 0;
  std::uint64_t nodes = 0;  // search nodes visited; varies with worker count
};

/// Searches r : G → ℕ with r = 0 exactly on H, values in [1, bound] on G*,
/// and f_r = f. Values are assigned in index order, so the first witness is
/// lexicographically least. Parallel over the value of the least G* element.
RealizationResult search_realization(const ContextPtr& ctx, std::uint64_t bound);

}  // namespace cocycle_forge
