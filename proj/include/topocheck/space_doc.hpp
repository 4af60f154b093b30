#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "topocheck/space.hpp"

namespace topocheck {

inline constexpr std::size_t kMaxDocumentBytes = 64 * 1024;

/// Text form of a space:
///
///   # comment
///   space E
///   points a b c
///   open a b
///
/// The empty set and the full set are implicit.
struct SpaceDoc {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;

  friend bool operator==(const SpaceDoc&, const SpaceDoc&) = default;
};

SpaceDoc parse_space(std::string_view text);

/// Opens are deduplicated, trivial ones dropped, members listed in point
/// order, and the list sorted by size then by point positions.
std::string render_space(const SpaceDoc& doc);

SpaceDoc canonicalize(const SpaceDoc& doc);

/// Throws NotATopology when the opens are not closed under union and
/// intersection.
FiniteSpace to_space(const SpaceDoc& doc);
SpaceDoc to_doc(const FiniteSpace& sp, std::string name);

/// Comma-separated labels; the empty string is the empty set. Labels that
/// themselves contain commas may be written in parentheses or bare.
PointSet parse_label_set(const FiniteSpace& sp, std::string_view text);

}  // namespace topocheck
