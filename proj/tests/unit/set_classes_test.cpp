#include <gtest/gtest.h>

#include "support.hpp"
#include "topocheck/maps.hpp"
#include "topocheck/set_classes.hpp"

using namespace topocheck;
using testing_support::set;

namespace {

const FiniteSpace kE = fixtures::three_point();
const FiniteSpace kS = fixtures::sierpinski();
const FiniteSpace kI2 = fixtures::indiscrete_pair();

TEST(SetClassesTest, ThreePointExamples) {
  const PointSet bc = set(3, 0b110);
  const PointSet c = set(3, 0b100);
  EXPECT_TRUE(is_sg_closed(kE, bc));
  EXPECT_TRUE(is_gs_closed(kE, bc));
  EXPECT_EQ(semi_kernel(kE, bc), kE.full_set());
  EXPECT_TRUE(is_hsg_closed(kE, c));
  EXPECT_EQ(nd_singletons(kE), c);

  const ClassReport r = classify_basic(kE, c);
  EXPECT_TRUE(r.nowhere_dense);
  EXPECT_TRUE(r.semi_closed);
  EXPECT_FALSE(r.preopen);
  EXPECT_FALSE(r.sg_open.has_value());
}

TEST(SetClassesTest, SierpinskiExamples) {
  const PointSet zero = set(2, 0b01);
  const PointSet one = set(2, 0b10);
  EXPECT_TRUE(is_nowhere_dense(kS, one));
  EXPECT_TRUE(is_preopen(kS, zero));
  EXPECT_TRUE(is_g_open(kS, zero));
  EXPECT_FALSE(is_g_open(kS, one));
  EXPECT_FALSE(is_sg_open(kS, one));
  EXPECT_FALSE(is_gs_closed(kS, zero));
  EXPECT_EQ(semi_closure(kS, zero), kS.full_set());
}

TEST(SetClassesTest, IndiscretePair) {
  EXPECT_TRUE(is_sg_open(kI2, set(2, 0b01)));
  EXPECT_TRUE(nd_singletons(kI2).is_empty());
  EXPECT_TRUE(is_hsg_closed(kI2, set(2, 0b01)));
  EXPECT_FALSE(is_nowhere_dense(kI2, set(2, 0b01)));
}

TEST(SetClassesTest, TrivialSets) {
  for (const FiniteSpace& sp : {kE, kS, kI2}) {
    const ClassReport full = classify(sp, sp.full_set());
    EXPECT_TRUE(full.open && full.dense && full.semi_open);
    EXPECT_TRUE(*full.gs_closed);
    EXPECT_TRUE(is_sg_open(sp, sp.empty_set()));
    EXPECT_TRUE(semi_interior(sp, sp.empty_set()).is_empty());
  }
}

TEST(SetClassesTest, ProductSquareFixture) {
  const std::array factors{kE, kE};
  const ProductSpace sq = product(factors);
  PointSet aa = sq.space.empty_set();
  for (int i : {1, 2}) {
    for (int j : {1, 2}) aa = aa.with(i * 3 + j);
  }
  EXPECT_EQ(semi_closure(sq.space, aa), sq.space.full_set());
  EXPECT_FALSE(is_sg_closed(sq.space, aa));
  const PointSet pre = preimage(sq.projections[0], set(3, 0b110));
  EXPECT_EQ(pre, PointSet(9, 0b111111000));
  EXPECT_FALSE(is_sg_closed(sq.space, pre));
}

TEST(SetClassesTest, MixedProductNdSingletons) {
  const FiniteSpace sigma = FiniteSpace::indiscrete(3).relabeled({"a", "b", "c"});
  const std::array factors{sigma, kE};
  const ProductSpace p = product(factors);
  // X x {c}: indices 2, 5, 8.
  EXPECT_EQ(nd_singletons(p.space), PointSet::of(9, {2, 5, 8}));
  EXPECT_TRUE(is_hsg_closed(sigma, set(3, 0b011)));
  EXPECT_FALSE(is_hsg_closed(p.space, preimage(p.projections[0], set(3, 0b011))));
}

TEST(SetClassesTest, AllClassesMatchOracle) {
  for (const auto& t : testing_support::topologies_up_to(4)) {
    const FiniteSpace sp = testing_support::to_space(t);
    for (oracle::Mask a = 0; a <= t.full(); ++a) {
      const PointSet pa(t.n, a);
      const ClassReport r = classify(sp, pa);
      SCOPED_TRACE(sp.canonical() + " A=" + pa.to_string());
      ASSERT_EQ(r.open, t.is_open(a));
      ASSERT_EQ(r.closed, t.is_closed(a));
      ASSERT_EQ(r.semi_open, t.semi_open(a));
      ASSERT_EQ(r.semi_closed, t.semi_closed(a));
      ASSERT_EQ(r.preopen, t.preopen(a));
      ASSERT_EQ(r.regular_open, t.regular_open(a));
      ASSERT_EQ(r.beta_open, t.beta_open(a));
      ASSERT_EQ(r.dense, t.closure(a) == t.full());
      ASSERT_EQ(r.nowhere_dense, t.nowhere_dense(a));
      ASSERT_EQ(*r.g_open, t.g_open(a));
      ASSERT_EQ(*r.g_closed, t.g_closed(a));
      ASSERT_EQ(*r.sg_open, t.sg_open(a));
      ASSERT_EQ(*r.sg_closed, t.sg_closed(a));
      ASSERT_EQ(*r.gs_closed, t.gs_closed(a));
      ASSERT_EQ(*r.hsg_closed, t.hsg_closed(a));
      ASSERT_EQ(semi_closure(sp, pa).bits(), t.semi_closure(a));
    }
  }
}

TEST(SetClassesTest, SemiOpenFamilyIsSortedAndComplete) {
  const auto& family = semi_open_sets(kE);
  const std::vector<PointSet> expected{set(3, 0b000), set(3, 0b011), set(3, 0b111)};
  EXPECT_EQ(family, expected);
}

TEST(SetClassesTest, TableBackedClassesRefuseWideSpaces) {
  const FiniteSpace wide = FiniteSpace::discrete(17);
  try {
    is_sg_open(wide, wide.empty_set());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSizeLimitExceeded);
  }
  // Operator-level classes still work.
  EXPECT_TRUE(is_semi_open(wide, PointSet::of(17, {4})));
  EXPECT_NO_THROW(classify_basic(wide, wide.full_set()));
}

}  // namespace
