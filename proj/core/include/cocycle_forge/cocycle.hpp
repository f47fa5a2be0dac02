#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocycle_forge/group.hpp"

namespace cocycle_forge {

/// An n×n 0/1 table over a group with no cocycle guarantee. Results of vee()
/// and pointwise_product() are BinaryTables and must be validated by callers.
class BinaryTable {
 public:
  /// Filled with `fill`.
  BinaryTable(GroupPtr group, bool fill);
  /// Throws Error(shape_error) on dimension mismatch, Error(invalid_table) on
  /// entries other than 0/1.
  static BinaryTable from_rows(GroupPtr group, const std::vector<std::vector<int>>& rows);

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const Group& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return n_; }

  bool at(Element s, Element t) const noexcept { return bits_[s * n_ + t] != 0; }
  bool operator()(Element s, Element t) const noexcept { return at(s, t); }
  void set(Element s, Element t, bool v) noexcept { bits_[s * n_ + t] = v ? 1 : 0; }
  void flip(Element s, Element t) noexcept { bits_[s * n_ + t] ^= 1; }

  /// Number of 1 entries.
  std::size_t support_size() const noexcept;

  friend bool operator==(const BinaryTable& a, const BinaryTable& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && same_group(a.group_, b.group_);
  }

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// A validated idempotent normalized weak 2-cocycle.
class Cocycle {
 public:
  const BinaryTable& table() const noexcept { return table_; }
  const Group& group() const noexcept { return table_.group(); }
  const GroupPtr& group_ptr() const noexcept { return table_.group_ptr(); }
  std::size_t order() const noexcept { return table_.order(); }
  bool operator()(Element s, Element t) const noexcept { return table_.at(s, t); }

  /// Wraps a table without validating it. Only for fault injection (negative
  /// controls) and for constructions whose validity is re-checked at once.
  static Cocycle unchecked(BinaryTable t) { return Cocycle(std::move(t)); }

  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.table_ == b.table_; }

 private:
  explicit Cocycle(BinaryTable t) : table_(std::move(t)) {}
  BinaryTable table_;
};

struct CocycleViolation {
  enum class Kind { normalization, cocycle_identity };
  Kind kind;
  Element sigma = 0;
  Element tau = 0;
  Element rho = 0;  // unused for normalization

  std::string describe() const;
};

struct CocycleCheck {
  std::optional<Cocycle> cocycle;
  std::optional<CocycleViolation> violation;
  explicit operator bool() const noexcept { return cocycle.has_value(); }
};

/// Checks normalization and f(σ,τ)f(στ,ρ) = f(τ,ρ)f(σ,τρ); reports the first
/// violation in (σ,τ,ρ) lexicographic order.
CocycleCheck validate_cocycle(const BinaryTable& t);

/// validate_cocycle, throwing Error(invalid_table) with the violation text.
Cocycle require_cocycle(const BinaryTable& t);

/// H(f) = {σ : f(σ,σ⁻¹) = 1}.
Subgroup inertial_group(const Cocycle& f);

/// f₀(σ,τ) = 1 iff σ ∈ H or τ ∈ H.
Cocycle waterhouse(const Subgroup& h);

/// The all-ones cocycle.
Cocycle trivial_cocycle(const GroupPtr& g);

enum class Ordering { equal, less, greater, incomparable };
std::string_view to_string(Ordering o);

/// Support containment order. Throws Error(domain_mismatch) across groups.
Ordering compare(const BinaryTable& f, const BinaryTable& g);
inline Ordering compare(const Cocycle& f, const Cocycle& g) { return compare(f.table(), g.table()); }

/// f ≤ g in the support order.
bool leq(const BinaryTable& f, const BinaryTable& g);

/// Pointwise maximum. Not closed on cocycles, hence the BinaryTable result.
BinaryTable vee(const std::vector<BinaryTable>& fs);
/// Entrywise product.
BinaryTable pointwise_product(const std::vector<BinaryTable>& fs);

/// First cell (row-major) where the two tables differ.
std::optional<std::pair<Element, Element>> first_difference(const BinaryTable& a,
                                                            const BinaryTable& b);

}  // namespace cocycle_forge
