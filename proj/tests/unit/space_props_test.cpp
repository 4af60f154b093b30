#include <gtest/gtest.h>

#include "support.hpp"
#include "topocheck/set_classes.hpp"
#include "topocheck/space_props.hpp"

using namespace topocheck;

namespace {

const FiniteSpace kE = fixtures::three_point();
const FiniteSpace kS = fixtures::sierpinski();
const FiniteSpace kI2 = fixtures::indiscrete_pair();
const FiniteSpace kD2 = fixtures::discrete_pair();

TEST(SpacePropsTest, LocallyIndiscreteExamples) {
  EXPECT_TRUE(is_locally_indiscrete(kI2));
  EXPECT_FALSE(is_locally_indiscrete(kS));
  EXPECT_FALSE(is_locally_indiscrete(kE));
  EXPECT_TRUE(is_locally_indiscrete(kD2));
}

TEST(SpacePropsTest, HyperconnectedExamples) {
  EXPECT_TRUE(is_hyperconnected(kE));
  EXPECT_FALSE(is_hyperconnected(kD2));
  for (const FiniteSpace& sp : {kE, kS, kI2, kD2}) EXPECT_TRUE(is_quasi_hyperdisconnected(sp));
}

TEST(SpacePropsTest, SemiHausdorffExamples) {
  EXPECT_TRUE(is_semi_hausdorff(kD2));
  EXPECT_FALSE(is_semi_hausdorff(kS));
  EXPECT_FALSE(is_semi_hausdorff(kI2));
}

TEST(SpacePropsTest, ResolvabilityExamples) {
  EXPECT_TRUE(is_resolvable(kI2));
  EXPECT_FALSE(is_resolvable(kS));
  EXPECT_TRUE(is_strongly_irresolvable(kS));
  EXPECT_FALSE(is_resolvable(kD2));
}

TEST(SpacePropsTest, BetaInsideSgExamples) {
  const std::array parts{kI2, kS};
  EXPECT_TRUE(beta_subset_of_sg(sum(parts).space));
  EXPECT_TRUE(beta_subset_of_sg(kI2));
  // Oracle scan over the 8 subsets of the fixture.
  const oracle::Topology e{3, {0b000, 0b011, 0b111}};
  bool expected = true;
  for (oracle::Mask a = 0; a < 8; ++a) {
    if (e.beta_open(a) && !e.sg_open(a)) expected = false;
  }
  EXPECT_EQ(beta_subset_of_sg(kE), expected);
}

TEST(SpacePropsTest, MatchesOracle) {
  for (const auto& t : testing_support::topologies_up_to(4)) {
    const FiniteSpace sp = testing_support::to_space(t);
    SCOPED_TRACE(sp.canonical());
    ASSERT_EQ(is_locally_indiscrete(sp), t.locally_indiscrete());
    ASSERT_EQ(is_locally_indiscrete_by_singletons(sp), t.locally_indiscrete());
    ASSERT_EQ(is_locally_indiscrete_by_sg_open(sp), t.locally_indiscrete());
    ASSERT_EQ(is_hyperconnected(sp), t.hyperconnected());
    ASSERT_EQ(is_semi_hausdorff(sp), t.semi_hausdorff());
    ASSERT_EQ(is_resolvable(sp), t.resolvable());
    ASSERT_EQ(is_dense_in_itself(sp), t.dense_in_itself());
    ASSERT_EQ(is_indiscrete(sp), t.opens.size() == 2 || t.n == 1);
    ASSERT_EQ(is_discrete(sp), t.opens.size() == (std::size_t{1} << t.n));

    bool strongly = true;
    for (oracle::Mask u : t.opens) {
      if (u == 0) continue;
      // Open subspace on u, rebuilt by the oracle.
      std::vector<int> pts;
      for (int p = 0; p < t.n; ++p) {
        if (u >> p & 1) pts.push_back(p);
      }
      oracle::Topology sub{static_cast<int>(pts.size()), {}};
      for (oracle::Mask v : t.opens) {
        oracle::Mask w = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (v >> pts[i] & 1) w |= oracle::Mask{1} << i;
        }
        sub.opens.push_back(w);
      }
      std::sort(sub.opens.begin(), sub.opens.end());
      sub.opens.erase(std::unique(sub.opens.begin(), sub.opens.end()), sub.opens.end());
      if (sub.resolvable()) strongly = false;
    }
    ASSERT_EQ(is_strongly_irresolvable(sp), strongly);

    bool t_d = true;
    for (int p = 0; p < t.n; ++p) {
      if (!t.preopen(oracle::Mask{1} << p)) t_d = false;
    }
    ASSERT_EQ(is_singletons_locally_dense(sp), t_d);
  }
}

TEST(SpacePropsTest, ResolvableRejectsEmptyCarrier) {
  try {
    is_resolvable(FiniteSpace());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kEmptyCarrier);
  }
}

TEST(SpacePropsTest, RegistryNamesAreSnakeCase) {
  ASSERT_FALSE(space_predicates().empty());
  for (const SpacePredicate& p : space_predicates()) {
    EXPECT_NE(find_space_predicate(p.name), nullptr);
    for (char c : p.name) EXPECT_TRUE((c >= 'a' && c <= 'z') || c == '_') << p.name;
  }
  EXPECT_EQ(find_space_predicate("no_such_thing"), nullptr);
}

}  // namespace
