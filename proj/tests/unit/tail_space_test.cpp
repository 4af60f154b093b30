#include <gtest/gtest.h>

#include <random>

#include "topocheck/set_classes.hpp"
#include "topocheck/tail_space.hpp"

using namespace topocheck;
using Value = TailSet::Value;

namespace {

// Members are checked on [1, kHorizon]; generated sets settle well before it.
constexpr Value kHorizon = 400;

TailSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<Value> value(1, 150);
  std::vector<Value> finite(rng() % 10);
  for (Value& v : finite) v = value(rng);
  std::optional<Value> tail;
  if (rng() % 2) tail = value(rng);
  return TailSet::make(finite, tail);
}

bool same_members(const TailSet& got, const std::function<bool(Value)>& expected) {
  for (Value x = 1; x <= kHorizon; ++x) {
    if (got.contains(x) != expected(x)) return false;
  }
  return true;
}

/// Opens are {}, N and U_n = {n, n+1, ...} for n >= 3.
TailSet interior_by_scan(const TailSet& a) {
  if (a.is_naturals()) return a;
  for (Value n = 3; n <= kHorizon; ++n) {
    bool inside = a.tail_start().has_value();
    for (Value x = n; inside && x <= kHorizon; ++x) inside = a.contains(x);
    if (inside) return TailSet::tail(n);
  }
  return {};
}

/// Closed sets are {}, N and {1..m} for m >= 2.
TailSet closure_by_scan(const TailSet& a) {
  if (a.is_empty()) return {};
  for (Value m = 2; m <= kHorizon; ++m) {
    if (a.subset_of(TailSet::initial_segment(m))) return TailSet::initial_segment(m);
  }
  return TailSet::naturals();
}

TEST(TailSetTest, Canonicalization) {
  EXPECT_EQ(TailSet::make({5, 6, 9}, 7), TailSet::make({}, 5));
  EXPECT_EQ(TailSet::make({1, 4}, 7).to_string(), "1,4;t=7");
  EXPECT_EQ(TailSet::finite({4, 1, 4}).to_string(), "1,4;");
  EXPECT_EQ(TailSet::naturals().to_string(), ";t=1");
  EXPECT_EQ(TailSet{}.to_string(), ";");
  EXPECT_THROW(TailSet::make({0}, std::nullopt), Error);
}

TEST(TailSetTest, ParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const TailSet a = random_set(rng);
    EXPECT_EQ(TailSet::parse(a.to_string()), a);
  }
  EXPECT_THROW(TailSet::parse("1,x;"), ParseError);
  EXPECT_THROW(TailSet::parse("1,2"), ParseError);
}

TEST(TailSetTest, AlgebraPointwise) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const TailSet a = random_set(rng);
    const TailSet b = random_set(rng);
    ASSERT_TRUE(same_members(a | b, [&](Value x) { return a.contains(x) || b.contains(x); }));
    ASSERT_TRUE(same_members(a & b, [&](Value x) { return a.contains(x) && b.contains(x); }));
    ASSERT_TRUE(same_members(a - b, [&](Value x) { return a.contains(x) && !b.contains(x); }));
    ASSERT_EQ(a.complement().complement(), a);
    ASSERT_EQ((a | b).complement(), a.complement() & b.complement());
    ASSERT_EQ((a & b).complement(), a.complement() | b.complement());
  }
}

TEST(TailSpaceTest, OperatorsMatchScan) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const TailSet a = random_set(rng);
    ASSERT_EQ(tail_interior(a), interior_by_scan(a)) << a.to_string();
    ASSERT_EQ(tail_closure(a), closure_by_scan(a)) << a.to_string();
  }
}

TEST(TailSpaceTest, Examples) {
  EXPECT_EQ(tail_closure(TailSet::singleton(5)), TailSet::initial_segment(5));
  EXPECT_TRUE(tail_interior(TailSet::singleton(5)).is_empty());
  EXPECT_EQ(tail_closure(TailSet::singleton(1)), TailSet::initial_segment(2));
  EXPECT_TRUE(tail_interior(TailSet::naturals()).is_naturals());
  EXPECT_TRUE(tail_closure(TailSet::naturals()).is_naturals());
  EXPECT_THROW(tail_open(2), Error);
  EXPECT_EQ(tail_open(3), TailSet::tail(3));
}

TEST(TailSpaceTest, ClassifyExamples) {
  const TailClassReport seven = tail_classify(TailSet::singleton(7));
  EXPECT_TRUE(seven.nowhere_dense);
  ASSERT_TRUE(seven.g_open.has_value());
  EXPECT_TRUE(*seven.g_open);

  const TailSet u5 = TailSet::tail(5);
  EXPECT_TRUE(tail_classify(u5).semi_open);
  EXPECT_EQ(u5.complement(), TailSet::initial_segment(4));

  const TailClassReport even = tail_classify(TailSet::finite({2, 4, 6}));
  EXPECT_FALSE(even.semi_open);
  EXPECT_TRUE(even.hsg_closed);
  EXPECT_FALSE(even.g_open.has_value());
}

TEST(TailSpaceTest, GOpenOnlyForSingletons) {
  try {
    tail_is_g_open(TailSet::finite({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kGOpenUnsupported);
  }
  // Singletons {1} and {2} are not closed either, so nothing closed sits
  // inside them except the empty set.
  for (Value x = 1; x <= 50; ++x) EXPECT_TRUE(tail_is_g_open(TailSet::singleton(x)));
}

TEST(TailSpaceTest, NdSingletonsIsEverything) { EXPECT_TRUE(tail_nd_singletons().is_naturals()); }

TEST(TailSpaceTest, TruncationShape) {
  const FiniteSpace t = tail_truncation(6);
  EXPECT_EQ(t.size(), 6);
  EXPECT_EQ(t.label(0), "1");
  // Opens: {}, full, and the clipped tails from 3 on.
  EXPECT_EQ(t.opens().size(), 6U);
  EXPECT_TRUE(t.is_open(PointSet::of(6, {2, 3, 4, 5})));
  EXPECT_FALSE(t.is_open(PointSet::of(6, {1, 2, 3, 4, 5})));
}

TEST(PointExtensionTest, Shape) {
  const FiniteSpace x = point_extension(2);
  EXPECT_EQ(x.size(), 3);
  EXPECT_EQ(x.opens().size(), 3U);
  EXPECT_EQ(x.labels(), (std::vector<std::string>{"a1", "a2", "p"}));
  EXPECT_THROW(point_extension(6), Error);
  EXPECT_THROW(point_extension(0), Error);
}

TEST(PointExtensionTest, WitnessSizeGrows) {
  for (int k = 1; k <= 5; ++k) {
    const FiniteSpace x = point_extension(k);
    const std::array factors{x, x};
    const FiniteSpace sq = product(factors).space;
    // Largest nowhere dense set, found by scanning all subsets for k <= 2.
    if (sq.size() <= 9) {
      int best = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << sq.size()); ++m) {
        const PointSet a(sq.size(), m);
        if (is_nowhere_dense(sq, a)) best = std::max(best, a.size());
      }
      EXPECT_GE(best, k);
    }
    const int n = x.size();
    PointSet w = sq.empty_set();
    for (int i = 0; i < k; ++i) w = w.with((n - 1) * n + i);
    EXPECT_TRUE(is_nowhere_dense(sq, w));
    EXPECT_TRUE(is_hsg_closed(sq, w));
  }
}

TEST(TailVerifyTest, AllChecksPass) {
  for (const CheckResult& r : verify_e1()) EXPECT_TRUE(r.passed) << r.to_string();
  for (const CheckResult& r : verify_r1_growth()) EXPECT_TRUE(r.passed) << r.to_string();
}

}  // namespace
