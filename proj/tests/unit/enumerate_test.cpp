#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "topocheck/enumerate.hpp"

using namespace topocheck;

namespace {

std::set<std::vector<oracle::Mask>> families_of(const std::vector<FiniteSpace>& spaces) {
  std::set<std::vector<oracle::Mask>> out;
  for (const FiniteSpace& sp : spaces) {
    std::vector<oracle::Mask> opens;
    for (const PointSet& u : sp.opens()) opens.push_back(u.bits());
    std::sort(opens.begin(), opens.end());
    out.insert(opens);
  }
  return out;
}

TEST(EnumerateTest, Counts) {
  EXPECT_EQ(count_spaces(1), 1U);
  EXPECT_EQ(count_spaces(2), 4U);
  EXPECT_EQ(count_spaces(3), 29U);
  EXPECT_EQ(count_spaces(4), 355U);
  EXPECT_EQ(count_spaces(5), 6942U);
  EXPECT_EQ(count_spaces(6), 209527U);
}

TEST(EnumerateTest, MatchesIndependentOracle) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<oracle::Mask>> expected;
    for (const auto& t : oracle::all_topologies(n)) expected.insert(t.opens);
    const auto got = enumerate_spaces(n);
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_EQ(families_of(got), expected) << "n=" << n;
  }
}

TEST(EnumerateTest, NaiveRouteAgrees) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(families_of(enumerate_spaces_naive(n)), families_of(enumerate_spaces(n)));
    EXPECT_EQ(count_spaces_naive(n), count_spaces(n));
  }
}

TEST(EnumerateTest, Deterministic) {
  const auto a = enumerate_spaces(4);
  const auto b = enumerate_spaces(4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(EnumerateTest, UpToConcatenates) {
  EXPECT_EQ(enumerate_spaces_up_to(4).size(), 1U + 4U + 29U + 355U);
}

TEST(EnumerateTest, Limits) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInvalidArgument;
  };
  EXPECT_EQ(code_of([] { count_spaces(7); }), Errc::kSizeLimitExceeded);
  EXPECT_EQ(code_of([] { count_spaces_naive(5); }), Errc::kSizeLimitExceeded);
  EXPECT_THROW(count_spaces(0), Error);
}

}  // namespace
