#include <gtest/gtest.h>

#include "topocheck/fixtures.hpp"
#include "topocheck/search.hpp"
#include "topocheck/set_classes.hpp"

using namespace topocheck;

namespace {

TEST(SearchTest, ExpressionFindsDiscretePair) {
  const auto found = search(parse_query("locally_indiscrete & ~indiscrete"), SearchOptions{2, {}, 1});
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found.front().space, FiniteSpace::discrete(2));
  for (const Witness& w : found) EXPECT_EQ(w.space.size(), 2);
}

TEST(SearchTest, HsgNotNowhereDenseIncludesIndiscretePair) {
  const Quest* q = find_quest("hsg-not-nowhere-dense");
  ASSERT_NE(q, nullptr);
  const auto found = search(*q, SearchOptions{2, {}, 1});
  const bool has = std::any_of(found.begin(), found.end(), [](const Witness& w) {
    return w.space == FiniteSpace::indiscrete(2) && w.sets.at(0) == PointSet::singleton(2, 0);
  });
  EXPECT_TRUE(has);
}

TEST(SearchTest, ProductQuestIncludesFixture) {
  const Quest* q = find_quest("product-sg-closed-failure");
  ASSERT_NE(q, nullptr);
  const auto found = search(*q, SearchOptions{3, {}, 1});
  const FiniteSpace e = fixtures::three_point();
  const bool has = std::any_of(found.begin(), found.end(), [&](const Witness& w) {
    return w.space == e && w.sets.at(0) == PointSet::of(3, {1, 2});
  });
  EXPECT_TRUE(has);
}

TEST(SearchTest, WitnessesRecheck) {
  for (const Quest& q : quests()) {
    const auto found = search(q, SearchOptions{std::min(3, q.max_points), {}, 1});
    for (const Witness& w : found) EXPECT_TRUE(q.holds(w)) << q.name << " " << w.to_string();
  }
}

TEST(SearchTest, DeterministicAcrossWorkerCounts) {
  const Quest* q = find_quest("g-open-not-sg-open");
  ASSERT_NE(q, nullptr);
  const auto one = search(*q, SearchOptions{4, {}, 1});
  const auto many = search(*q, SearchOptions{4, {}, 4});
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].to_string(), many[i].to_string());
}

TEST(SearchTest, LimitTruncates) {
  const auto all = search(parse_query("hyperconnected"), SearchOptions{3, {}, 1});
  const auto few = search(parse_query("hyperconnected"), SearchOptions{3, 5, 1});
  ASSERT_EQ(few.size(), 5U);
  for (std::size_t i = 0; i < few.size(); ++i) EXPECT_EQ(few[i].to_string(), all[i].to_string());
}

TEST(SearchTest, Refusals) {
  EXPECT_THROW(search(parse_query("hyperconnected"), SearchOptions{6, {}, 1}), Error);
  EXPECT_THROW(search(parse_query("nonsense"), SearchOptions{2, {}, 1}), Error);
  EXPECT_EQ(find_quest("nope"), nullptr);
}

TEST(SearchTest, WitnessFormat) {
  const Quest* q = find_quest("hsg-not-nowhere-dense");
  const auto found = search(*q, SearchOptions{1, {}, 1});
  ASSERT_EQ(found.size(), 1U);
  EXPECT_EQ(found[0].to_string(), "WITNESS space=0 set={0}");
}

}  // namespace
