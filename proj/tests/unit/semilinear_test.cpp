#include <gtest/gtest.h>

#include <random>

#include "cocycle_forge/decomposition.hpp"
#include "cocycle_forge/error.hpp"
#include "support.hpp"

using namespace cocycle_forge;
using namespace cocycle_forge::testing;

namespace {

const ElementSet kJ{1, 2, 3, 4, 5, 6, 7, 8};

std::string formatted(const SemilinearMap& r) {
  std::string out;
  for (const auto& v : r.values()) out += r.monoid()->format(v) + " ";
  return out;
}

}  // namespace

TEST(Monoid, NaturalsAndLexProducts) {
  const auto n = additive_naturals();
  EXPECT_EQ(n->describe(), "N");
  EXPECT_EQ(n->format(n->op({2}, {3})), "5");
  const auto l = lex_power(n, 3);
  EXPECT_EQ(l->describe(), "Lex(N,N,N)");
  EXPECT_TRUE(l->less({1, 5, 5}, {2, 0, 0}));
  EXPECT_TRUE(l->less({2, 0, 0}, {2, 0, 1}));
  EXPECT_EQ(l->format(l->op({1, 2, 3}, {1, 1, 1})), "(2,3,4)");
  std::vector<MonoidValue> samples;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b)
      for (std::uint64_t c = 0; c < 3; ++c) samples.push_back({a, b, c});
  EXPECT_FALSE(check_monoid_axioms(*l, samples).has_value());
  EXPECT_THROW(lex_product({}), Error);
}

TEST(SemilinearMap, Validation) {
  const auto g = make_cyclic(3);
  EXPECT_TRUE(validate_r(g, additive_naturals(), {{0}, {1}, {1}}));
  const auto nonzero_identity = validate_r(g, additive_naturals(), {{1}, {1}, {1}});
  ASSERT_FALSE(nonzero_identity);
  EXPECT_EQ(nonzero_identity.violation->kind, RViolation::Kind::identity_not_neutral);
  const auto super = validate_r(g, additive_naturals(), {{0}, {1}, {5}});
  ASSERT_FALSE(super);
  EXPECT_EQ(super.violation->kind, RViolation::Kind::subadditivity);
  const auto bad_length = validate_r(g, additive_naturals(), {{0}, {1}});
  ASSERT_FALSE(bad_length);
  EXPECT_EQ(bad_length.violation->kind, RViolation::Kind::length);
  try {
    naturals_r(g, {0, 1, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_r);
  }
}

TEST(SemilinearMap, NeutralSetMustBeASubgroup) {
  // r = 0 on {0,1} only: subadditive fails or M_r is not closed.
  const auto r = validate_r(make_cyclic(4), additive_naturals(), {{0}, {0}, {1}, {1}});
  EXPECT_FALSE(r);
}

TEST(SemilinearMap, Z9CocycleIsTheReferenceTable) {
  EXPECT_EQ(emit_table(cocycle_from_r(z9_r()).table()), data("z9_table.txt"));
}

TEST(ChainLift, ColumnsForTheFiveClassIdeals) {
  const auto r = z9_r();
  const auto ctx = z9_context();
  const std::vector<std::pair<std::vector<ElementSet>, std::string>> cases{
      {{kJ, {3, 4, 5, 6, 7, 8}, {4}, {}},
       "(0,0,0,0,0) (1,1,1,1,0) (2,2,2,2,0) (3,3,3,0,0) (4,4,0,0,0) (1,1,1,0,0) (2,2,2,0,0) (3,3,3,0,0) "
       "(3,3,3,0,0) "},
      {{kJ, {4, 5, 6, 7, 8}, {4}, {}},
       "(0,0,0,0,0) (1,1,1,1,0) (2,2,2,2,0) (3,3,3,3,0) (4,4,0,0,0) (1,1,1,0,0) (2,2,2,0,0) (3,3,3,0,0) "
       "(3,3,3,0,0) "},
      {{kJ, {6, 7}, {}},
       "(0,0,0,0) (1,1,1,0) (2,2,2,0) (3,3,3,0) (4,4,4,0) (1,1,1,0) (2,2,0,0) (3,3,0,0) (3,3,3,0) "},
      {{kJ, {2, 3, 4, 7, 8}, {4}, {}},
       "(0,0,0,0,0) (1,1,1,1,0) (2,2,2,0,0) (3,3,3,0,0) (4,4,0,0,0) (1,1,1,1,0) (2,2,2,2,0) (3,3,3,0,0) "
       "(3,3,3,0,0) "},
      {{kJ, {3, 4, 8}, {}},
       "(0,0,0,0) (1,1,1,0) (2,2,2,0) (3,3,0,0) (4,4,0,0) (1,1,1,0) (2,2,2,0) (3,3,3,0) (3,3,0,0) "},
  };
  for (const auto& [sets, expected] : cases) {
    const auto chain = chain_of(ctx, sets);
    const auto lifted = chain_lift(r, chain);
    EXPECT_EQ(formatted(lifted), expected);
    EXPECT_EQ(cocycle_from_r(lifted).table(), chain_table(chain));
    EXPECT_EQ(cocycle_from_r(lifted), f_sub_I(chain[1]));
  }
}

TEST(ChainLift, RejectsForeignChain) {
  const auto ctx = AlgebraContext::make(cocycle_from_r(z9_r_prime()));
  const auto chain = chain_of(ctx, {kJ, {}});
  try {
    chain_lift(z9_r(), chain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::context_mismatch);
  }
}

TEST(PadChain, AddsEndpointsAndSquares) {
  const auto ctx = z9_context();
  const auto padded = pad_chain(chain_of(ctx, {{3, 4, 5, 6, 7, 8}, {4, 5, 6, 7, 8}}));
  EXPECT_EQ(padded[0].members(), kJ);
  EXPECT_TRUE(padded[padded.length() - 1].empty());
  for (std::size_t i = 1; i < padded.length(); ++i) EXPECT_TRUE(padded[i].is_subset_of(padded[i - 1]));
  const auto full = chain_of(ctx, {kJ, {6, 7}, {}});
  EXPECT_EQ(pad_chain(full), full);
}

TEST(PadChain, PaddedLiftCertifiesMiddleChains) {
  const auto r = z9_r();
  const auto ctx = z9_context();
  for (const auto& sets : std::vector<std::vector<ElementSet>>{
           {{6, 7}, {}}, {{3, 4, 8}, {4}}, {{2, 3, 4, 7, 8}, {3, 4, 8}}, {{4, 5, 6, 7, 8}, {4, 5, 6, 7, 8}}}) {
    const auto chain = chain_of(ctx, sets);
    const auto p = padded_lift(r, chain);
    EXPECT_TRUE(p.certified);
    EXPECT_EQ(cocycle_from_r(p.lifted).table(), chain_table(chain));
  }
}

TEST(RPrime, FI3IsFRPrime) {
  EXPECT_EQ(f_sub_I(ideal(z9_context(), {6, 7})), cocycle_from_r(z9_r_prime()));
}

TEST(Search, D3HasNoRealization) {
  const auto res = search_realization(d3_context(), 20);
  EXPECT_FALSE(res.witness.has_value());
  EXPECT_EQ(res.bound, 20u);
}

TEST(Search, FindsLeastWitnessForZ9) {
  const auto ctx = z9_context();
  const auto res = search_realization(ctx, 4);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(cocycle_from_r(*res.witness), ctx->cocycle());
  // The reference r is the lexicographically least realization with values ≥ 1.
  EXPECT_EQ(res.witness->values(), z9_r().values());
}

TEST(Search, TooSmallBoundFails) {
  EXPECT_FALSE(search_realization(z9_context(), 3).witness.has_value());
}
