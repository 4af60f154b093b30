#include "topocheck/tail_space.hpp"

#include <algorithm>
#include <charconv>

namespace topocheck {
namespace {

using Value = TailSet::Value;

/// Result of applying `op` pointwise. Both inputs are constant on the gaps
/// between their breakpoints, so evaluating one representative per gap is
/// exact.
template <typename Op>
TailSet combine(const TailSet& a, const TailSet& b, Op op) {
  std::vector<Value> points{1};
  points.insert(points.end(), a.finite_part().begin(), a.finite_part().end());
  points.insert(points.end(), b.finite_part().begin(), b.finite_part().end());
  if (a.tail_start()) points.push_back(*a.tail_start());
  if (b.tail_start()) points.push_back(*b.tail_start());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Value> members;
  auto push_range = [&](Value lo, Value hi) {
    if (hi - lo + 1 > TailSet::kMaxFinitePart - std::min(members.size(), TailSet::kMaxFinitePart)) {
      throw Error(Errc::kSizeLimitExceeded, "tail set finite part too large");
    }
    for (Value v = lo; v <= hi; ++v) members.push_back(v);
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Value x = points[i];
    if (op(a.contains(x), b.contains(x))) members.push_back(x);
    if (i + 1 < points.size() && points[i + 1] > x + 1) {
      if (op(a.contains(x + 1), b.contains(x + 1))) push_range(x + 1, points[i + 1] - 1);
    }
  }
  const Value beyond = points.back() + 1;
  std::optional<Value> tail;
  if (op(a.contains(beyond), b.contains(beyond))) tail = beyond;
  return TailSet::make(std::move(members), tail);
}

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  throw ParseError(what, 1, static_cast<int>(pos) + 1);
}

Value parse_value(std::string_view text, std::size_t offset) {
  Value v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) {
    parse_fail("expected a positive integer, found '" + std::string(text) + "'", offset);
  }
  return v;
}

/// Largest closed subset of a finite set: the longest initial segment
/// {1..m} with m >= 2 inside it, or empty.
TailSet largest_closed_subset_of_finite(const TailSet& a) {
  Value m = 0;
  while (a.contains(m + 1)) ++m;
  return m >= 2 ? TailSet::initial_segment(m) : TailSet{};
}

}  // namespace

TailSet TailSet::make(std::vector<Value> finite, std::optional<Value> tail_start) {
  if (std::find(finite.begin(), finite.end(), Value{0}) != finite.end() ||
      tail_start == Value{0}) {
    throw Error(Errc::kInvalidArgument, "tail sets hold positive integers only");
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
  if (tail_start) {
    Value t = *tail_start;
    finite.erase(std::lower_bound(finite.begin(), finite.end(), t), finite.end());
    while (t > 1 && !finite.empty() && finite.back() == t - 1) {
      finite.pop_back();
      --t;
    }
    tail_start = t;
  }
  TailSet out;
  out.finite_ = std::move(finite);
  out.tail_ = tail_start;
  return out;
}

TailSet TailSet::initial_segment(Value m) {
  std::vector<Value> members;
  members.reserve(m);
  for (Value v = 1; v <= m; ++v) members.push_back(v);
  return finite(std::move(members));
}

bool TailSet::contains(Value v) const {
  if (v == 0) return false;
  if (tail_ && v >= *tail_) return true;
  return std::binary_search(finite_.begin(), finite_.end(), v);
}

std::optional<std::size_t> TailSet::size() const {
  if (tail_) return std::nullopt;
  return finite_.size();
}

TailSet TailSet::complement() const {
  return combine(naturals(), *this, [](bool x, bool y) { return x && !y; });
}

TailSet operator|(const TailSet& a, const TailSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

TailSet operator&(const TailSet& a, const TailSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

TailSet operator-(const TailSet& a, const TailSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

std::string TailSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < finite_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(finite_[i]);
  }
  out += ';';
  if (tail_) out += "t=" + std::to_string(*tail_);
  return out;
}

TailSet TailSet::parse(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) parse_fail("missing ';'", text.size());
  std::vector<Value> members;
  const std::string_view head = text.substr(0, semi);
  std::size_t start = 0;
  while (start < head.size()) {
    std::size_t comma = head.find(',', start);
    if (comma == std::string_view::npos) comma = head.size();
    members.push_back(parse_value(head.substr(start, comma - start), start));
    start = comma + 1;
    if (comma + 1 == head.size()) parse_fail("trailing ','", comma);
  }
  std::optional<Value> tail;
  const std::string_view rest = text.substr(semi + 1);
  if (!rest.empty()) {
    if (rest.substr(0, 2) != "t=") parse_fail("expected 't=<start>'", semi + 1);
    tail = parse_value(rest.substr(2), semi + 3);
  }
  return make(std::move(members), tail);
}

TailSet tail_open(Value n) {
  if (n == 1) return TailSet::naturals();
  if (n == 2) throw Error(Errc::kInvalidArgument, "U_2 is not open in the tail topology");
  return TailSet::tail(n);
}

TailSet tail_interior(const TailSet& a) {
  if (a.is_naturals()) return a;
  if (const auto t = a.tail_start()) return TailSet::tail(std::max<Value>(*t, 3));
  return {};
}

TailSet tail_closure(const TailSet& a) {
  if (a.is_empty()) return {};
  if (a.tail_start()) return TailSet::naturals();
  return TailSet::initial_segment(std::max<Value>(a.finite_part().back(), 2));
}

bool tail_is_open(const TailSet& a) { return a == tail_interior(a); }
bool tail_is_closed(const TailSet& a) { return a == tail_closure(a); }

/// Every x >= 3 has closure {1..x}, a finite set, so membership is the same
/// for all x >= 4 and one representative decides the tail.
TailSet tail_nd_singletons() {
  std::vector<Value> members;
  for (Value x = 1; x <= 3; ++x) {
    if (tail_interior(tail_closure(TailSet::singleton(x))).is_empty()) members.push_back(x);
  }
  std::optional<Value> tail;
  if (tail_interior(tail_closure(TailSet::singleton(4))).is_empty()) tail = 4;
  return TailSet::make(std::move(members), tail);
}

bool tail_is_g_open(const TailSet& a) {
  if (a.size() != std::size_t{1}) {
    throw Error(Errc::kGOpenUnsupported,
                "g-openness in the tail space is only decided for singletons, got " +
                    a.to_string());
  }
  return largest_closed_subset_of_finite(a).subset_of(tail_interior(a));
}

TailClassReport tail_classify(const TailSet& a) {
  TailClassReport r;
  const TailSet int_cl = tail_interior(tail_closure(a));
  r.semi_open = a.subset_of(tail_closure(tail_interior(a)));
  r.nowhere_dense = int_cl.is_empty();
  r.hsg_closed = (tail_nd_singletons() & int_cl).is_empty();
  if (a.size() == std::size_t{1}) r.g_open = tail_is_g_open(a);
  return r;
}

FiniteSpace tail_truncation(int window) {
  if (window < 3 || window > PointSet::kMaxWidth) {
    throw Error(Errc::kSizeLimitExceeded, "truncation window must be in [3, 64]");
  }
  std::vector<PointSet> nbhds;
  std::vector<std::string> labels;
  for (int x = 1; x <= window; ++x) {
    // Point x sits at index x - 1. Below 3 the only open neighbourhood is
    // the whole window; from 3 on it is the clipped U_x.
    const int lo = x >= 3 ? x : 1;
    PointSet u = PointSet::empty(window);
    for (int y = lo; y <= window; ++y) u = u.with(y - 1);
    nbhds.push_back(u);
    labels.push_back(std::to_string(x));
  }
  return FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels));
}

FiniteSpace point_extension(int k) {
  if (k < 1) throw Error(Errc::kInvalidArgument, "point extension needs k >= 1");
  if (k > 5) throw Error(Errc::kSizeLimitExceeded, "point extension supports k <= 5");
  const int n = k + 1;
  const PointSet base = PointSet(n, PointSet::mask(k));
  std::vector<PointSet> nbhds(static_cast<std::size_t>(k), base);
  nbhds.push_back(PointSet::full(n));
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  labels.emplace_back("p");
  return FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels));
}

}  // namespace topocheck
