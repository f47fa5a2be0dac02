#pragma once

#include <string>
#include <vector>

#include "cocycle_forge/algebra.hpp"
#include "cocycle_forge/io.hpp"
#include "cocycle_forge/semilinear.hpp"

namespace cocycle_forge::testing {

inline std::string data_path(const std::string& name) { return std::string(COCYCLE_FORGE_TEST_DATA) + "/" + name; }

inline std::string data(const std::string& name) { return read_file(data_path(name)); }

inline SemilinearMap z9_r() { return naturals_r(make_cyclic(9), {0, 1, 2, 3, 4, 1, 2, 3, 3}); }

inline SemilinearMap z9_r_prime() { return naturals_r(make_cyclic(9), {0, 9, 18, 27, 36, 9, 17, 24, 27}); }

inline ContextPtr z9_context() { return AlgebraContext::make(cocycle_from_r(z9_r())); }

inline GroupPtr d3() { return make_dihedral(3); }

inline Cocycle d3_cocycle() { return parse_cocycle(d3(), data("d3_table.txt")); }

inline ContextPtr d3_context() { return AlgebraContext::make(d3_cocycle()); }

inline MonomialIdeal ideal(const ContextPtr& ctx, const ElementSet& s) { return MonomialIdeal::from_members(ctx, s); }

/// {J, ..., ∅} style chain from raw member sets.
inline DescendingChain chain_of(const ContextPtr& ctx, const std::vector<ElementSet>& sets) {
  std::vector<MonomialIdeal> ideals;
  for (const auto& s : sets) ideals.push_back(ideal(ctx, s));
  return DescendingChain(std::move(ideals));
}

}  // namespace cocycle_forge::testing
