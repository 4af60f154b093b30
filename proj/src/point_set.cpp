#include "topocheck/point_set.hpp"

namespace topocheck {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kNotATopology: return "NotATopology";
    case Errc::kSizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::kWidthMismatch: return "WidthMismatch";
    case Errc::kEmptyCarrier: return "EmptyCarrier";
    case Errc::kParseError: return "ParseError";
    case Errc::kDuplicateLabel: return "DuplicateLabel";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kUnknownIdentifier: return "UnknownIdentifier";
    case Errc::kGOpenUnsupported: return "GOpenUnsupported";
    case Errc::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

PointSet PointSet::singleton(int width, int point) {
  return PointSet::empty(width).with(point);
}

PointSet PointSet::of(int width, std::span<const int> points) {
  PointSet out = PointSet::empty(width);
  for (int p : points) out = out.with(p);
  return out;
}

PointSet PointSet::with(int point) const {
  if (point < 0 || point >= width_) {
    throw Error(Errc::kInvalidArgument,
                "point " + std::to_string(point) + " outside width " +
                    std::to_string(width_));
  }
  return raw(width_, bits_ | (std::uint64_t{1} << point));
}

PointSet PointSet::without(int point) const {
  if (point < 0 || point >= width_) {
    throw Error(Errc::kInvalidArgument,
                "point " + std::to_string(point) + " outside width " +
                    std::to_string(width_));
  }
  return raw(width_, bits_ & ~(std::uint64_t{1} << point));
}

std::vector<int> PointSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int p) { out.push_back(p); });
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int p) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(p);
  });
  out += '}';
  return out;
}

void PointSet::throw_width_mismatch(int a, int b) {
  throw Error(Errc::kWidthMismatch, "point set widths differ: " +
                                        std::to_string(a) + " vs " +
                                        std::to_string(b));
}

}  // namespace topocheck
