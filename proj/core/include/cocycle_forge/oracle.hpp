#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cocycle_forge/algebra.hpp"
#include "cocycle_forge/semilinear.hpp"

namespace cocycle_forge {

struct CensusConfig {
  GroupPtr group;
  /// Keep only cocycles with this inertial group.
  std::optional<ElementSet> inertial;
  std::size_t max_cocycles = 1'000'000;
  std::size_t max_chains = 10'000;      // per cocycle
  std::size_t max_chain_length = 4;
  std::size_t random_r = 0;             // random semilinear maps added to the suite
  std::uint64_t seed = 1;
  /// Visit cells in a seeded random order (the sorted result must not change).
  bool shuffle = false;
};

struct CocycleCensus {
  std::vector<Cocycle> cocycles;  // sorted by table bits
  bool truncated = false;
};

/// Every idempotent normalized cocycle on cfg.group, by pruned depth-first
/// search over the (n−1)² free cells. Each table is validated before output.
CocycleCensus enumerate_cocycles(const CensusConfig& cfg);

/// Independent oracle: all 2^{(n−1)²} normalized tables filtered by
/// validate_cocycle. Throws Error(size_error) for n > 5.
std::vector<Cocycle> brute_force_cocycles(const GroupPtr& group);

/// All ideals of A_f inside J, sorted by size then lexicographically. Subset
/// filter up to |G*| = 12, closure of the principal-ideal lattice up to 20.
/// Throws Error(size_error) above 20.
std::vector<MonomialIdeal> enumerate_ideals(const ContextPtr& ctx);

struct ChainCensus {
  std::vector<DescendingChain> chains;
  bool truncated = false;
};

/// Non-strict descending chains of length 2..max_length drawn from `ideals`.
ChainCensus enumerate_chains(const std::vector<MonomialIdeal>& ideals, std::size_t max_length,
                             std::size_t cap);

/// r(σ) = weighted distance from the identity in the Cayley graph of G with
/// edges x → xg, weight 0 for g in a random subgroup M and a random weight in
/// [1, max_weight] otherwise. The result is subadditive with M_r = M.
SemilinearMap random_semilinear(const GroupPtr& group, std::mt19937_64& rng,
                                std::uint64_t max_weight = 10);

/// Descending chain drawn at random from the ideal lattice, of length 2..4.
DescendingChain random_chain(const ContextPtr& ctx, const std::vector<MonomialIdeal>& ideals,
                             std::mt19937_64& rng);

struct SuiteReport {
  std::map<std::string, std::size_t> passes;
  std::map<std::string, std::size_t> failures;
  std::vector<std::string> counterexamples;
  std::size_t cocycles = 0;
  std::size_t ideals = 0;
  std::size_t chains = 0;
  bool truncated = false;

  bool ok() const noexcept { return counterexamples.empty(); }
  void record(const std::string& property, bool passed, const std::string& where);
  void merge(const SuiteReport& other);
  std::string to_text() const;
};

/// Runs every property on one cocycle: lattice identities over its ideals,
/// chain identities over up to `max_chains` chains, morphism checks and both
/// decompositions.
SuiteReport check_cocycle(const Cocycle& f, std::size_t max_chains, std::size_t max_chain_length);

/// Runs the sandwich and padded-lift checks for one map and chain.
SuiteReport check_lift(const SemilinearMap& r, const DescendingChain& chain);

/// Whole census on cfg.group plus cfg.random_r random maps, parallel over
/// cocycles, merged in census order.
SuiteReport property_suite(const CensusConfig& cfg);

struct MutationOutcome {
  Element sigma = 0;
  Element tau = 0;
  bool caught_by_validation = false;
  bool caught_by_identity = false;
  std::string location;
};

struct NegativeControlReport {
  std::vector<MutationOutcome> outcomes;
  bool all_caught() const noexcept;
};

/// Flips each cell of f_r in turn. A flip is caught when the table stops being
/// a cocycle, or when a suite identity fails on it; the realization identity
/// f = f_r is part of the suite for cocycles with a known r.
NegativeControlReport negative_control(const SemilinearMap& r);

/// `n=<n> table=<rows joined by '/'> H=<set> t=<depth> N=<sizes> classes=<count>`.
std::string census_record(const Cocycle& f);

}  // namespace cocycle_forge
