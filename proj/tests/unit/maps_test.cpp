#include <gtest/gtest.h>

#include "support.hpp"
#include "topocheck/maps.hpp"
#include "topocheck/set_classes.hpp"

using namespace topocheck;
using testing_support::set;

namespace {

const FiniteSpace kE = fixtures::three_point();

oracle::Mask image_of(std::span<const int> f, oracle::Mask a) {
  oracle::Mask out = 0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (a >> p & 1) out |= oracle::Mask{1} << f[p];
  }
  return out;
}

oracle::Mask preimage_of(std::span<const int> f, oracle::Mask b) {
  oracle::Mask out = 0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (b >> f[p] & 1) out |= oracle::Mask{1} << p;
  }
  return out;
}

TEST(MapsTest, SquareProjection) {
  const std::array factors{kE, kE};
  const ProductSpace sq = product(factors);
  const MapReport r = map_classify(sq.projections[0]);
  EXPECT_TRUE(r.continuous);
  EXPECT_TRUE(r.open);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.irresolute);
  EXPECT_TRUE(r.gs_irresolute);
  EXPECT_FALSE(r.sg_irresolute);
  EXPECT_EQ(preimage(sq.projections[0], set(3, 0b110)), PointSet(9, 0b111111000));
}

TEST(MapsTest, IdentityHasEveryFlag) {
  for (const FiniteSpace& sp : {kE, fixtures::sierpinski(), fixtures::indiscrete_pair()}) {
    const SpaceMap id = SpaceMap::identity(sp);
    for (const auto& [name, value] : map_classify(id).flags()) EXPECT_TRUE(value) << name;
    EXPECT_TRUE(preimage_preserves_hsg(id));
    EXPECT_EQ(image(id, set(sp.size(), 1)), set(sp.size(), 1));
    EXPECT_TRUE(preimage(id, sp.empty_set()).is_empty());
  }
}

TEST(MapsTest, HsgPreimageFixture) {
  const FiniteSpace sigma = FiniteSpace::indiscrete(3).relabeled({"a", "b", "c"});
  const std::array factors{sigma, kE};
  EXPECT_FALSE(preimage_preserves_hsg(product(factors).projections[0]));
}

TEST(MapsTest, MatchesOracleOnSmallSpaces) {
  const auto spaces = testing_support::topologies_up_to(2);
  auto three = oracle::all_topologies(3);
  std::vector<oracle::Topology> all = spaces;
  for (std::size_t i = 0; i < three.size(); i += 4) all.push_back(three[i]);

  for (const auto& x : all) {
    for (const auto& y : all) {
      const FiniteSpace sx = testing_support::to_space(x);
      const FiniteSpace sy = testing_support::to_space(y);
      std::vector<int> f(static_cast<std::size_t>(x.n), 0);
      for (;;) {
        const MapReport r = map_classify(SpaceMap(sx, sy, f));
        bool continuous = true, open = true, almost_open = true, pre_semi = true, delta = true,
             irresolute = true, sg = true, gs = true, anti_delta = true;
        for (oracle::Mask a = 0; a <= x.full(); ++a) {
          const oracle::Mask fa = image_of(f, a);
          if (x.is_open(a) && !y.is_open(fa)) open = false;
          if (x.regular_open(a) && !y.is_open(fa)) almost_open = false;
          if (x.semi_open(a) && !y.semi_open(fa)) pre_semi = false;
        }
        for (int p = 0; p < x.n; ++p) {
          const oracle::Mask s = oracle::Mask{1} << p;
          if (x.nowhere_dense(s) && !y.nowhere_dense(image_of(f, s))) anti_delta = false;
        }
        for (oracle::Mask b = 0; b <= y.full(); ++b) {
          const oracle::Mask pb = preimage_of(f, b);
          if (y.is_open(b) && !x.is_open(pb)) continuous = false;
          if (y.nowhere_dense(b) && !x.nowhere_dense(pb)) delta = false;
          if (y.semi_open(b) && !x.semi_open(pb)) irresolute = false;
          if (y.sg_closed(b) && !x.sg_closed(pb)) sg = false;
          if (y.gs_closed(b) && !x.gs_closed(pb)) gs = false;
        }
        const bool surjective = image_of(f, x.full()) == y.full();
        ASSERT_EQ(r.surjective, surjective);
        ASSERT_EQ(r.continuous, continuous);
        ASSERT_EQ(r.open, open);
        ASSERT_EQ(r.almost_open, almost_open);
        ASSERT_EQ(r.pre_semi_open, pre_semi);
        ASSERT_EQ(r.delta_open, delta);
        ASSERT_EQ(r.anti_delta_open, anti_delta);
        ASSERT_EQ(r.irresolute, irresolute);
        ASSERT_EQ(r.sg_irresolute, sg);
        ASSERT_EQ(r.gs_irresolute, gs);

        std::size_t i = 0;
        while (i < f.size() && ++f[i] == y.n) f[i++] = 0;
        if (i == f.size()) break;
      }
    }
  }
}

TEST(MapsTest, RefusesWideCarriers) {
  const FiniteSpace wide = FiniteSpace::discrete(13);
  try {
    map_classify(SpaceMap::identity(wide));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSizeLimitExceeded);
  }
}

}  // namespace
