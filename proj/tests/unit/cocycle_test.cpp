#include <gtest/gtest.h>

#include "cocycle_forge/cocycle.hpp"
#include "cocycle_forge/error.hpp"
#include "support.hpp"

using namespace cocycle_forge;
using namespace cocycle_forge::testing;

TEST(Cocycle, ReferenceZ9TableIsValid) {
  const BinaryTable t = parse_table(make_cyclic(9), data("z9_table.txt"));
  EXPECT_TRUE(validate_cocycle(t));
}

TEST(Cocycle, InertialGroupOfZ9CocycleIsTrivial) {
  EXPECT_EQ(inertial_group(cocycle_from_r(z9_r())).members(), ElementSet{0});
}

TEST(Cocycle, NormalizationViolationIsReported) {
  BinaryTable t(make_cyclic(3), true);
  t.set(0, 2, false);
  const CocycleCheck c = validate_cocycle(t);
  ASSERT_FALSE(c);
  EXPECT_EQ(c.violation->kind, CocycleViolation::Kind::normalization);
  EXPECT_THROW(require_cocycle(t), Error);
}

TEST(Cocycle, IdentityViolationNamesATriple) {
  auto t = cocycle_from_r(z9_r()).table();
  t.flip(1, 1);  // f(1,1) = 0 while f(1,2)... breaks the identity
  const CocycleCheck c = validate_cocycle(t);
  ASSERT_FALSE(c);
  EXPECT_EQ(c.violation->kind, CocycleViolation::Kind::cocycle_identity);
  EXPECT_FALSE(c.violation->describe().empty());
}

TEST(Cocycle, WaterhouseIsOneExactlyOnH) {
  const auto g = make_cyclic(6);
  const Subgroup h(g, {0, 3});
  const Cocycle f0 = waterhouse(h);
  for (Element s = 0; s < 6; ++s)
    for (Element t = 0; t < 6; ++t) EXPECT_EQ(f0(s, t), h.contains(s) || h.contains(t));
  EXPECT_EQ(inertial_group(f0), h);
}

TEST(Cocycle, OrderAndLattice) {
  const Cocycle f = cocycle_from_r(z9_r());
  const Cocycle f0 = waterhouse(inertial_group(f));
  const Cocycle one = trivial_cocycle(f.group_ptr());
  EXPECT_EQ(compare(f0, f), Ordering::less);
  EXPECT_EQ(compare(f, one), Ordering::less);
  EXPECT_EQ(compare(f, f), Ordering::equal);
  EXPECT_EQ(compare(f, f0), Ordering::greater);
  EXPECT_EQ(vee({f0.table(), f.table()}), f.table());
  EXPECT_EQ(pointwise_product({f.table(), one.table()}), f.table());
  EXPECT_FALSE(first_difference(f.table(), f.table()).has_value());
}

TEST(Cocycle, IncomparableTables) {
  BinaryTable a(make_cyclic(2), true), b(make_cyclic(2), true);
  a.set(1, 1, false);
  BinaryTable c = b;
  b.set(0, 0, false);
  EXPECT_EQ(compare(a, b), Ordering::incomparable);
  EXPECT_EQ(compare(c, c), Ordering::equal);
}

TEST(Cocycle, ShapeMismatch) {
  try {
    BinaryTable::from_rows(make_cyclic(2), {{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::shape_error);
  }
}
