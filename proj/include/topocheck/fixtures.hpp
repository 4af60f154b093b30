#pragma once

#include "topocheck/space.hpp"

namespace topocheck::fixtures {

/// {a,b,c} with opens {}, {a,b}, {a,b,c}.
FiniteSpace three_point();
/// {0,1} with opens {}, {0}, {0,1}.
FiniteSpace sierpinski();
/// {x,y}, indiscrete.
FiniteSpace indiscrete_pair();
/// {0,1}, discrete.
FiniteSpace discrete_pair();

}  // namespace topocheck::fixtures
