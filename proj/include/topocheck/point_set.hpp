#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "topocheck/errors.hpp"

namespace topocheck {

/// Subset of the points {0, ..., width-1} of a finite space, stored as a
/// 64-bit mask. Bits at or above `width` are always clear.
class PointSet {
 public:
  static constexpr int kMaxWidth = 64;

  constexpr PointSet() = default;

  constexpr PointSet(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width < 0 || width > kMaxWidth) {
      throw Error(Errc::kSizeLimitExceeded,
                  "point set width " + std::to_string(width) + " exceeds 64");
    }
    if ((bits & ~mask(width)) != 0) {
      throw Error(Errc::kInvalidArgument, "point set has bits beyond its width");
    }
  }

  static constexpr std::uint64_t mask(int width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  }

  static constexpr PointSet empty(int width) { return PointSet(width, 0); }
  static constexpr PointSet full(int width) { return PointSet(width, mask(width)); }
  static PointSet singleton(int width, int point);
  static PointSet of(int width, std::span<const int> points);
  static PointSet of(int width, std::initializer_list<int> points) {
    return of(width, std::span<const int>(points.begin(), points.size()));
  }

  constexpr int width() const noexcept { return width_; }
  constexpr std::uint64_t bits() const noexcept { return bits_; }

  constexpr bool contains(int point) const noexcept {
    return point >= 0 && point < width_ && ((bits_ >> point) & 1U) != 0;
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool is_empty() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept { return bits_ == mask(width_); }

  constexpr PointSet complement() const noexcept {
    PointSet out;
    out.width_ = width_;
    out.bits_ = ~bits_ & mask(width_);
    return out;
  }

  bool subset_of(PointSet other) const {
    check_width(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(PointSet other) const {
    check_width(other);
    return (bits_ & other.bits_) != 0;
  }

  PointSet with(int point) const;
  PointSet without(int point) const;

  /// Member indices in increasing order.
  std::vector<int> indices() const;

  /// Calls `fn(index)` for each member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  friend PointSet operator|(PointSet a, PointSet b) {
    a.check_width(b);
    return raw(a.width_, a.bits_ | b.bits_);
  }
  friend PointSet operator&(PointSet a, PointSet b) {
    a.check_width(b);
    return raw(a.width_, a.bits_ & b.bits_);
  }
  friend PointSet operator-(PointSet a, PointSet b) {
    a.check_width(b);
    return raw(a.width_, a.bits_ & ~b.bits_);
  }
  PointSet& operator|=(PointSet b) { return *this = *this | b; }
  PointSet& operator&=(PointSet b) { return *this = *this & b; }

  friend constexpr bool operator==(PointSet, PointSet) = default;

  /// Canonical order: by cardinality, then by the mask as an integer.
  friend constexpr std::strong_ordering canonical_order(PointSet a, PointSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  struct CanonicalLess {
    constexpr bool operator()(PointSet a, PointSet b) const {
      return canonical_order(a, b) < 0;
    }
  };

  /// Index form `{0,2}`; labelled rendering lives with the space.
  std::string to_string() const;

 private:
  static constexpr PointSet raw(int width, std::uint64_t bits) noexcept {
    PointSet out;
    out.width_ = width;
    out.bits_ = bits;
    return out;
  }
  void check_width(PointSet other) const {
    if (other.width_ != width_) throw_width_mismatch(width_, other.width_);
  }
  [[noreturn]] static void throw_width_mismatch(int a, int b);

  int width_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace topocheck
