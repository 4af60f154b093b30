#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "topocheck/space.hpp"

namespace topocheck {

/// Largest carrier on either side of a map that map_classify will scan.
inline constexpr int kMapScanWidth = 12;

struct MapReport {
  bool surjective = false;
  bool continuous = false;
  bool open = false;
  bool almost_open = false;     ///< images of regular open sets are open
  bool pre_semi_open = false;   ///< images of semi-open sets are semi-open
  bool delta_open = false;      ///< preimages of nowhere dense sets are nowhere dense
  bool anti_delta_open = false; ///< images of nowhere dense singletons are nowhere dense
  bool irresolute = false;      ///< preimages of semi-open sets are semi-open
  bool sg_irresolute = false;   ///< preimages of sg-closed sets are sg-closed
  bool gs_irresolute = false;   ///< preimages of gs-closed sets are gs-closed

  static constexpr std::size_t kFlagCount = 10;
  std::array<std::pair<std::string_view, bool>, kFlagCount> flags() const;
};

PointSet image(const SpaceMap& f, PointSet a);
PointSet preimage(const SpaceMap& f, PointSet b);

MapReport map_classify(const SpaceMap& f);

/// Preimage of every hsg-closed subset of the codomain is hsg-closed.
bool preimage_preserves_hsg(const SpaceMap& f);

}  // namespace topocheck
