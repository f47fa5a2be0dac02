#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cocycle_forge/element_set.hpp"

namespace cocycle_forge {

/// A finite group given by its multiplication table. The identity is always
/// index 0. Instances are immutable and shared through GroupPtr.
class Group {
 public:
  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::vector<std::vector<Element>> rows() const;
  ElementSet all() const { return ElementSet::first_n(n_); }

  /// Groups are equal when their tables are; labels do not matter.
  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend std::shared_ptr<const Group> group_from_table(const std::vector<std::vector<Element>>&,
                                                       std::vector<std::string>);
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Validates a square table (identity at 0, Latin square, associative) and
/// builds the group. `names` defaults to "0".."n-1".
/// Throws Error(invalid_table / invalid_order) naming the first violation.
GroupPtr group_from_table(const std::vector<std::vector<Element>>& rows,
                          std::vector<std::string> names = {});

/// Z/nZ with table[a][b] = (a + b) mod n.
GroupPtr make_cyclic(std::size_t n);

/// Dihedral group of order 2m, elements e, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b
/// with a^m = b^2 = e and bab = a^{-1}.
GroupPtr make_dihedral(std::size_t m);

/// Pointer-or-table equality.
bool same_group(const GroupPtr& a, const GroupPtr& b);

class Subgroup {
 public:
  /// Throws Error(invalid_subgroup) unless members contain 0 and are closed
  /// under products and inverses.
  Subgroup(GroupPtr parent, const ElementSet& members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const Group& group() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  std::size_t size() const noexcept { return members_.size(); }
  /// G \ H
  ElementSet complement() const { return parent_->all() - members_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
};

/// The double coset H x H.
ElementSet double_coset(const Subgroup& h, Element x);

/// Partition of G into classes HσH, sorted by least member.
std::vector<ElementSet> double_cosets(const Subgroup& h);

/// Group description accepted by the CLI: "cyclic<N>", "dihedral<M>", "d<M>"
/// (also "z<N>"); returns nullptr for anything else.
GroupPtr builtin_group(const std::string& spec);

}  // namespace cocycle_forge
