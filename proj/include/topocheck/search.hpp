#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topocheck/query.hpp"
#include "topocheck/space.hpp"

namespace topocheck {

inline constexpr int kMaxSpaceSearchPoints = 5;

struct Witness {
  FiniteSpace space;
  std::vector<PointSet> sets;
  std::optional<SpaceMap> map;
  std::string description;

  /// `WITNESS space=<canonical>[ set={...}]*[ map=<assignment>]`
  std::string to_string() const;
};

struct SearchOptions {
  int n_max = 3;
  std::optional<std::size_t> limit;
  int workers = 1;
};

/// A named search for a subset- or map-level phenomenon.
struct Quest {
  std::string_view name;
  std::string_view summary;
  int max_points;
  /// All witnesses inside one enumerated space, in subset order.
  std::vector<Witness> (*probe)(const FiniteSpace&);
  /// Re-evaluates the searched property on a witness.
  bool (*holds)(const Witness&);
};

std::span<const Quest> quests();
const Quest* find_quest(std::string_view name);

/// Spaces with 1..n_max points satisfying `expr`, in enumeration order.
std::vector<Witness> search(const PropertyExpr& expr, const SearchOptions& options);
std::vector<Witness> search(const Quest& quest, const SearchOptions& options);

}  // namespace topocheck
