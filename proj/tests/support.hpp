#pragma once

#include <array>
#include <vector>

#include "oracle.hpp"
#include "topocheck/fixtures.hpp"
#include "topocheck/space.hpp"

namespace testing_support {

inline topocheck::FiniteSpace to_space(const oracle::Topology& t) {
  std::vector<topocheck::PointSet> family;
  for (oracle::Mask u : t.opens) family.emplace_back(t.n, u);
  return topocheck::validate_topology(t.n, family);
}

inline topocheck::PointSet set(int width, std::uint64_t bits) { return topocheck::PointSet(width, bits); }

/// Topologies on 1..n points from the oracle enumerator.
inline std::vector<oracle::Topology> topologies_up_to(int n) {
  std::vector<oracle::Topology> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : oracle::all_topologies(k)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace testing_support
