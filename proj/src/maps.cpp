#include "topocheck/maps.hpp"

#include "topocheck/set_classes.hpp"

namespace topocheck {
namespace {

void require_scan_width(const SpaceMap& f) {
  require_width(f.domain(), kMapScanWidth, "map classification (domain)");
  require_width(f.codomain(), kMapScanWidth, "map classification (codomain)");
}

template <typename Fn>
void for_each_subset(const FiniteSpace& sp, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) fn(PointSet(sp.size(), m));
}

/// check(s) holds for every subset s with select(s).
template <typename Select, typename Check>
bool all_subsets(const FiniteSpace& sp, Select&& select, Check&& check) {
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    const PointSet s(sp.size(), m);
    if (select(s) && !check(s)) return false;
  }
  return true;
}

}  // namespace

std::array<std::pair<std::string_view, bool>, MapReport::kFlagCount>
MapReport::flags() const {
  return {{
      {"surjective", surjective},
      {"continuous", continuous},
      {"open", open},
      {"almost_open", almost_open},
      {"pre_semi_open", pre_semi_open},
      {"delta_open", delta_open},
      {"anti_delta_open", anti_delta_open},
      {"irresolute", irresolute},
      {"sg_irresolute", sg_irresolute},
      {"gs_irresolute", gs_irresolute},
  }};
}

PointSet image(const SpaceMap& f, PointSet a) {
  require_member(f.domain(), a);
  PointSet out = f.codomain().empty_set();
  a.for_each([&](int p) { out = out.with(f(p)); });
  return out;
}

PointSet preimage(const SpaceMap& f, PointSet b) {
  require_member(f.codomain(), b);
  PointSet out = f.domain().empty_set();
  for (int p = 0; p < f.domain().size(); ++p) {
    if (b.contains(f(p))) out = out.with(p);
  }
  return out;
}

MapReport map_classify(const SpaceMap& f) {
  require_scan_width(f);
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  MapReport r;

  r.surjective = image(f, x.full_set()).is_full();
  r.continuous = true;
  for (const PointSet& v : y.opens()) {
    if (!x.is_open(preimage(f, v))) {
      r.continuous = false;
      break;
    }
  }
  r.open = true;
  for (const PointSet& u : x.opens()) {
    if (!y.is_open(image(f, u))) {
      r.open = false;
      break;
    }
  }

  auto in_x = [&](auto pred) { return [&x, pred](PointSet s) { return pred(x, s); }; };
  auto in_y = [&](auto pred) { return [&y, pred](PointSet s) { return pred(y, s); }; };
  auto image_in_y = [&](auto pred) {
    return [&f, &y, pred](PointSet s) { return pred(y, image(f, s)); };
  };
  auto preimage_in_x = [&](auto pred) {
    return [&f, &x, pred](PointSet s) { return pred(x, preimage(f, s)); };
  };
  auto open_pred = [](const FiniteSpace& sp, PointSet s) { return sp.is_open(s); };
  auto regular_open = [](const FiniteSpace& sp, PointSet s) { return is_regular_open(sp, s); };
  auto semi_open = [](const FiniteSpace& sp, PointSet s) { return is_semi_open(sp, s); };
  auto nowhere_dense = [](const FiniteSpace& sp, PointSet s) { return is_nowhere_dense(sp, s); };
  auto sg_closed = [](const FiniteSpace& sp, PointSet s) { return is_sg_closed(sp, s); };
  auto gs_closed = [](const FiniteSpace& sp, PointSet s) { return is_gs_closed(sp, s); };

  r.almost_open = all_subsets(x, in_x(regular_open), image_in_y(open_pred));
  r.pre_semi_open = all_subsets(x, in_x(semi_open), image_in_y(semi_open));
  r.delta_open = all_subsets(y, in_y(nowhere_dense), preimage_in_x(nowhere_dense));
  r.irresolute = all_subsets(y, in_y(semi_open), preimage_in_x(semi_open));
  r.sg_irresolute = all_subsets(y, in_y(sg_closed), preimage_in_x(sg_closed));
  r.gs_irresolute = all_subsets(y, in_y(gs_closed), preimage_in_x(gs_closed));

  r.anti_delta_open = true;
  nd_singletons(x).for_each([&](int p) {
    if (!is_nowhere_dense(y, PointSet::singleton(y.size(), f(p)))) r.anti_delta_open = false;
  });
  return r;
}

bool preimage_preserves_hsg(const SpaceMap& f) {
  require_scan_width(f);
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  bool preserved = true;
  for_each_subset(y, [&](PointSet b) {
    if (preserved && is_hsg_closed(y, b) && !is_hsg_closed(x, preimage(f, b))) {
      preserved = false;
    }
  });
  return preserved;
}

}  // namespace topocheck
