#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topocheck/point_set.hpp"

namespace topocheck {

/// Carrier-size limit for operations that scan all 2^n subsets.
inline constexpr int kExhaustiveWidth = 16;
/// Upper bound on the number of open sets a space will materialize.
inline constexpr std::size_t kMaxOpenCount = std::size_t{1} << 20;

namespace detail {

struct SemiTables;

struct SpaceData {
  int n = 0;
  std::vector<PointSet> min_nbhd;
  std::vector<std::string> labels;

  // Lazily built caches. Writers hold `cache_mu`; readers check the ready
  // flags first.
  mutable std::mutex cache_mu;
  mutable std::atomic<bool> opens_ready{false};
  mutable std::vector<PointSet> opens;
  mutable std::atomic<bool> semi_ready{false};
  mutable std::shared_ptr<const SemiTables> semi;
};

}  // namespace detail

/// A finite topological space. Finite spaces are Alexandroff, so the
/// topology is held as the table of minimal open neighbourhoods; the full
/// open-set family is materialized on first use.
///
/// Instances are immutable handles over shared data and are cheap to copy.
/// Equality compares the topology only, never the labels.
class FiniteSpace {
 public:
  /// The empty space.
  FiniteSpace();

  /// `nbhds[p]` must contain `p` and be up-closed: q in nbhds[p] implies
  /// nbhds[q] is a subset of nbhds[p].
  static FiniteSpace from_min_neighborhoods(std::vector<PointSet> nbhds,
                                            std::vector<std::string> labels = {});
  static FiniteSpace indiscrete(int n);
  static FiniteSpace discrete(int n);

  int size() const noexcept { return data_->n; }
  PointSet empty_set() const { return PointSet::empty(size()); }
  PointSet full_set() const { return PointSet::full(size()); }

  PointSet min_neighborhood(int p) const { return data_->min_nbhd.at(static_cast<std::size_t>(p)); }
  std::span<const PointSet> min_neighborhoods() const { return data_->min_nbhd; }

  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::string& label(int p) const { return data_->labels.at(static_cast<std::size_t>(p)); }
  std::optional<int> find_label(std::string_view label) const;

  /// All open sets in canonical order. Throws SizeLimitExceeded past
  /// kMaxOpenCount members.
  const std::vector<PointSet>& opens() const;

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement()); }

  FiniteSpace relabeled(std::vector<std::string> labels) const;

  /// Compact text form used in witnesses: points, then each nontrivial open,
  /// separated by '|', e.g. `a,b,c|a,b`.
  std::string canonical() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b);

  const detail::SpaceData& data() const noexcept { return *data_; }

 private:
  explicit FiniteSpace(std::shared_ptr<const detail::SpaceData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::SpaceData> data_;
};

/// Throws SizeLimitExceeded when `sp` has more than `limit` points.
void require_width(const FiniteSpace& sp, int limit, std::string_view what);
/// Throws WidthMismatch unless `a` lives in `sp`.
void require_member(const FiniteSpace& sp, PointSet a);

enum class TopologyMode {
  kStrict,    ///< family (plus empty and full set) must already be a topology
  kComplete,  ///< family is a subbasis; generate the topology
};

FiniteSpace validate_topology(int n, std::span<const PointSet> family,
                              TopologyMode mode = TopologyMode::kStrict,
                              std::vector<std::string> labels = {});

/// `{a,b}` using the space's labels; labels containing ',' are wrapped in
/// parentheses, e.g. `{(a,b),(c,c)}`.
std::string format_set(const FiniteSpace& sp, PointSet a);

PointSet interior(const FiniteSpace& sp, PointSet a);
PointSet closure(const FiniteSpace& sp, PointSet a);
/// Intersection of all open supersets.
PointSet kernel(const FiniteSpace& sp, PointSet a);

/// Total function between the point sets of two finite spaces.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> assign);

  static SpaceMap identity(const FiniteSpace& sp);

  const FiniteSpace& domain() const noexcept { return domain_; }
  const FiniteSpace& codomain() const noexcept { return codomain_; }
  std::span<const int> assignment() const noexcept { return assign_; }
  int operator()(int p) const { return assign_.at(static_cast<std::size_t>(p)); }

  /// `a->x,b->y` using labels.
  std::string to_string() const;

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<int> assign_;
};

struct ProductSpace {
  FiniteSpace space;
  std::vector<SpaceMap> projections;
};

/// Points are tuples in row-major order (first factor most significant);
/// labels are the factor labels joined with ','.
ProductSpace product(std::span<const FiniteSpace> factors);

struct SumSpace {
  FiniteSpace space;
  std::vector<SpaceMap> injections;
};

/// Disjoint union; point labels become `<part index>:<label>`.
SumSpace sum(std::span<const FiniteSpace> parts);

FiniteSpace subspace(const FiniteSpace& sp, PointSet carrier);

}  // namespace topocheck
