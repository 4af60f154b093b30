#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topocheck/report.hpp"
#include "topocheck/space.hpp"

namespace topocheck {

/// Eventually-constant subset of the positive integers: an explicit finite
/// part plus an optional tail {t, t+1, ...}. Kept canonical: finite members
/// are all below t - 1, so t is the least tail start. The family is closed
/// under complement, union and intersection.
class TailSet {
 public:
  using Value = std::uint64_t;
  /// Largest explicit finite part a set operation will produce.
  static constexpr std::size_t kMaxFinitePart = std::size_t{1} << 20;

  TailSet() = default;

  static TailSet make(std::vector<Value> finite, std::optional<Value> tail_start);
  static TailSet finite(std::vector<Value> members) { return make(std::move(members), std::nullopt); }
  static TailSet tail(Value start) { return make({}, start); }
  static TailSet naturals() { return tail(1); }
  static TailSet singleton(Value v) { return make({v}, std::nullopt); }
  /// {1, ..., m}; empty when m is 0.
  static TailSet initial_segment(Value m);

  const std::vector<Value>& finite_part() const noexcept { return finite_; }
  std::optional<Value> tail_start() const noexcept { return tail_; }

  bool contains(Value v) const;
  bool is_empty() const noexcept { return finite_.empty() && !tail_; }
  bool is_finite() const noexcept { return !tail_.has_value(); }
  bool is_naturals() const noexcept { return tail_ == Value{1}; }
  /// Cardinality of a finite set.
  std::optional<std::size_t> size() const;

  TailSet complement() const;
  friend TailSet operator|(const TailSet& a, const TailSet& b);
  friend TailSet operator&(const TailSet& a, const TailSet& b);
  friend TailSet operator-(const TailSet& a, const TailSet& b);
  bool subset_of(const TailSet& other) const { return (*this - other).is_empty(); }

  friend bool operator==(const TailSet&, const TailSet&) = default;

  /// `1,4;t=7`, `1,4;`, `;t=1`; the empty set is `;`.
  std::string to_string() const;
  static TailSet parse(std::string_view text);

 private:
  std::vector<Value> finite_;
  std::optional<Value> tail_;
};

// The tail topology on the positive integers: open sets are the empty set,
// everything, and U_n = {n, n+1, ...} for n >= 3.

/// U_n for n >= 3, or everything for n == 1; throws InvalidArgument for
/// n == 2, which is not open.
TailSet tail_open(TailSet::Value n);

TailSet tail_interior(const TailSet& a);
TailSet tail_closure(const TailSet& a);
bool tail_is_open(const TailSet& a);
bool tail_is_closed(const TailSet& a);

struct TailClassReport {
  bool semi_open = false;
  bool nowhere_dense = false;
  bool hsg_closed = false;
  /// Only computed for singletons.
  std::optional<bool> g_open;
};

TailClassReport tail_classify(const TailSet& a);

/// Points whose singleton is nowhere dense (all of them).
TailSet tail_nd_singletons();

/// Singleton queries only; anything else throws GOpenUnsupported.
bool tail_is_g_open(const TailSet& a);

/// The tail topology cut to {1..window}: opens are the empty set, the
/// window, and U_n clipped to the window for 3 <= n <= window.
FiniteSpace tail_truncation(int window);

/// k points a_1..a_k plus an extra closed point p; opens are the empty set,
/// {a_1..a_k} and everything. The extra point is the last index.
FiniteSpace point_extension(int k);

/// Symbolic checks on the tail space over the eventually-constant algebra:
/// singletons nowhere dense, nonempty semi-open sets cofinite, hsg-closed
/// sets finite, failure of g-open cover compactness, and agreement with the
/// finite truncation of width `window`.
std::vector<CheckResult> verify_e1(int window = 12);

/// For k = 1..5, {p} x {a_1..a_k} is nowhere dense of size k in the square
/// of point_extension(k).
std::vector<CheckResult> verify_r1_growth();

}  // namespace topocheck
