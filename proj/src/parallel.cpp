#include "topocheck/parallel.hpp"

#include <cstdlib>

namespace topocheck {

int default_workers() {
  if (const char* env = std::getenv("TOPOCHECK_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace topocheck
