#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "topocheck/space.hpp"

namespace topocheck {

inline constexpr int kMaxEnumerationPoints = 6;
inline constexpr int kMaxNaivePoints = 4;

/// Streams every topology on the labelled points {0..n-1} exactly once, in a
/// fixed order (the discrete space first). Topologies are generated as
/// specialization preorders by depth-first search over the ordered pairs,
/// pruning any branch whose transitive closure hits an excluded pair.
void enumerate_spaces(int n, const std::function<void(const FiniteSpace&)>& visit);
std::vector<FiniteSpace> enumerate_spaces(int n);
/// Spaces for n = 1..n_max, concatenated in increasing n.
std::vector<FiniteSpace> enumerate_spaces_up_to(int n_max);

/// Independent oracle: tries every family of subsets containing the empty and
/// full set and keeps those closed under pairwise union and intersection.
/// Each result is the sorted family of open masks.
std::vector<std::vector<std::uint64_t>> enumerate_families_naive(int n);
/// The oracle's families turned into spaces.
std::vector<FiniteSpace> enumerate_spaces_naive(int n);

std::uint64_t count_spaces(int n);
std::uint64_t count_spaces_naive(int n);

}  // namespace topocheck
