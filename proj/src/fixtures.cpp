#include "topocheck/fixtures.hpp"

#include <array>

namespace topocheck::fixtures {

FiniteSpace three_point() {
  const std::array family{PointSet::of(3, {0, 1})};
  return validate_topology(3, family, TopologyMode::kStrict, {"a", "b", "c"});
}

FiniteSpace sierpinski() {
  const std::array family{PointSet::of(2, {0})};
  return validate_topology(2, family);
}

FiniteSpace indiscrete_pair() {
  return FiniteSpace::indiscrete(2).relabeled({"x", "y"});
}

FiniteSpace discrete_pair() { return FiniteSpace::discrete(2); }

}  // namespace topocheck::fixtures
