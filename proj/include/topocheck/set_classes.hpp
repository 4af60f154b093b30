#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "topocheck/space.hpp"

namespace topocheck {

/// Membership of one subset in each generalized open/closed class. The
/// g-family fields are empty when only the operator-level classes were
/// computed (see classify_basic).
struct ClassReport {
  bool open = false;
  bool closed = false;
  bool semi_open = false;
  bool semi_closed = false;
  bool preopen = false;
  bool regular_open = false;
  bool beta_open = false;
  bool dense = false;
  bool nowhere_dense = false;
  std::optional<bool> g_open;
  std::optional<bool> g_closed;
  std::optional<bool> sg_open;
  std::optional<bool> sg_closed;
  std::optional<bool> gs_closed;
  std::optional<bool> hsg_closed;

  static constexpr std::size_t kFlagCount = 15;
  /// (snake_case name, value) in declaration order; unset flags read false.
  std::array<std::pair<std::string_view, bool>, kFlagCount> flags() const;
};

// Operator-level classes. These only use interior/closure and work for any
// carrier up to 64 points.
bool is_semi_open(const FiniteSpace& sp, PointSet a);
bool is_semi_closed(const FiniteSpace& sp, PointSet a);
bool is_preopen(const FiniteSpace& sp, PointSet a);
bool is_regular_open(const FiniteSpace& sp, PointSet a);
/// A is contained in cl(int(cl(A))).
bool is_beta_open(const FiniteSpace& sp, PointSet a);
bool is_dense(const FiniteSpace& sp, PointSet a);
bool is_nowhere_dense(const FiniteSpace& sp, PointSet a);
bool is_g_open(const FiniteSpace& sp, PointSet a);
/// cl(A) is inside every open superset of A.
bool is_g_closed(const FiniteSpace& sp, PointSet a);

/// Points whose singleton is nowhere dense.
PointSet nd_singletons(const FiniteSpace& sp);

/// Public hsg-closed test: no nowhere dense singleton lies in int(cl(A)).
bool is_hsg_closed(const FiniteSpace& sp, PointSet a);

// Semi-operators and the classes built on them scan all subsets of the
// carrier, so they need at most kExhaustiveWidth points. Tables are built
// once per space and shared.
PointSet semi_interior(const FiniteSpace& sp, PointSet a);
PointSet semi_closure(const FiniteSpace& sp, PointSet a);
PointSet semi_kernel(const FiniteSpace& sp, PointSet a);
bool is_sg_open(const FiniteSpace& sp, PointSet a);
/// scl(A) is contained in sker(A).
bool is_sg_closed(const FiniteSpace& sp, PointSet a);
/// scl(A) is contained in ker(A).
bool is_gs_closed(const FiniteSpace& sp, PointSet a);
/// Every subset of A is sg-closed. Exponential in |A|; kept as the
/// independent route to check is_hsg_closed against.
bool is_hsg_closed_by_definition(const FiniteSpace& sp, PointSet a);

/// All semi-open sets in increasing mask order.
const std::vector<PointSet>& semi_open_sets(const FiniteSpace& sp);

ClassReport classify_basic(const FiniteSpace& sp, PointSet a);
ClassReport classify(const FiniteSpace& sp, PointSet a);

}  // namespace topocheck
