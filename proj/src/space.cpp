#include "topocheck/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace topocheck {
namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string format_label(const std::string& label) {
  if (label.find(',') == std::string::npos &&
      label.find('|') == std::string::npos) {
    return label;
  }
  return "(" + label + ")";
}

std::string join_labels(const FiniteSpace& sp, PointSet a) {
  std::string out;
  bool first = true;
  a.for_each([&](int p) {
    if (!first) out += ',';
    first = false;
    out += format_label(sp.label(p));
  });
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace() : data_(std::make_shared<detail::SpaceData>()) {}

FiniteSpace FiniteSpace::from_min_neighborhoods(std::vector<PointSet> nbhds,
                                                std::vector<std::string> labels) {
  const int n = static_cast<int>(nbhds.size());
  if (n > PointSet::kMaxWidth) {
    throw Error(Errc::kSizeLimitExceeded,
                "space has " + std::to_string(n) + " points; limit is 64");
  }
  for (int p = 0; p < n; ++p) {
    const PointSet u = nbhds[static_cast<std::size_t>(p)];
    if (u.width() != n) {
      throw Error(Errc::kWidthMismatch, "neighbourhood width differs from point count");
    }
    if (!u.contains(p)) {
      throw Error(Errc::kNotATopology,
                  "minimal neighbourhood of point " + std::to_string(p) +
                      " does not contain it");
    }
    u.for_each([&](int q) {
      if (!nbhds[static_cast<std::size_t>(q)].subset_of(u)) {
        throw Error(Errc::kNotATopology,
                    "neighbourhood table is not transitive at points " +
                        std::to_string(p) + ", " + std::to_string(q));
      }
    });
  }
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(Errc::kInvalidArgument, "label count differs from point count");
  }
  auto data = std::make_shared<detail::SpaceData>();
  data->n = n;
  data->min_nbhd = std::move(nbhds);
  data->labels = std::move(labels);
  return FiniteSpace(std::move(data));
}

FiniteSpace FiniteSpace::indiscrete(int n) {
  return from_min_neighborhoods(
      std::vector<PointSet>(static_cast<std::size_t>(n), PointSet::full(n)));
}

FiniteSpace FiniteSpace::discrete(int n) {
  std::vector<PointSet> nbhds;
  for (int p = 0; p < n; ++p) nbhds.push_back(PointSet::singleton(n, p));
  return from_min_neighborhoods(std::move(nbhds));
}

std::optional<int> FiniteSpace::find_label(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<int>(it - ls.begin());
}

const std::vector<PointSet>& FiniteSpace::opens() const {
  const detail::SpaceData& d = *data_;
  if (d.opens_ready.load(std::memory_order_acquire)) return d.opens;
  std::lock_guard lock(d.cache_mu);
  if (!d.opens_ready.load(std::memory_order_relaxed)) {
    // Opens are exactly the unions of minimal neighbourhoods.
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> family{0};
    for (const PointSet& u : d.min_nbhd) {
      const std::size_t count = family.size();
      for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t joined = family[i] | u.bits();
        if (seen.insert(joined).second) {
          family.push_back(joined);
          if (family.size() > kMaxOpenCount) {
            throw Error(Errc::kSizeLimitExceeded,
                        "space has more than " + std::to_string(kMaxOpenCount) +
                            " open sets");
          }
        }
      }
    }
    std::vector<PointSet> opens;
    opens.reserve(family.size());
    for (std::uint64_t bits : family) opens.emplace_back(d.n, bits);
    std::sort(opens.begin(), opens.end(), PointSet::CanonicalLess{});
    d.opens = std::move(opens);
    d.opens_ready.store(true, std::memory_order_release);
  }
  return d.opens;
}

bool FiniteSpace::is_open(PointSet a) const {
  require_member(*this, a);
  bool open = true;
  a.for_each([&](int p) {
    if (open && !min_neighborhood(p).subset_of(a)) open = false;
  });
  return open;
}

FiniteSpace FiniteSpace::relabeled(std::vector<std::string> labels) const {
  return from_min_neighborhoods(data_->min_nbhd, std::move(labels));
}

std::string FiniteSpace::canonical() const {
  std::string out = join_labels(*this, full_set());
  for (const PointSet& u : opens()) {
    if (u.is_empty() || u.is_full()) continue;
    out += '|';
    out += join_labels(*this, u);
  }
  return out;
}

bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
  return a.data_->n == b.data_->n && a.data_->min_nbhd == b.data_->min_nbhd;
}

void require_width(const FiniteSpace& sp, int limit, std::string_view what) {
  if (sp.size() > limit) {
    throw Error(Errc::kSizeLimitExceeded,
                std::string(what) + " needs at most " + std::to_string(limit) +
                    " points, space has " + std::to_string(sp.size()));
  }
}

void require_member(const FiniteSpace& sp, PointSet a) {
  if (a.width() != sp.size()) {
    throw Error(Errc::kWidthMismatch,
                "set of width " + std::to_string(a.width()) +
                    " used with a space of " + std::to_string(sp.size()) +
                    " points");
  }
}

FiniteSpace validate_topology(int n, std::span<const PointSet> family,
                              TopologyMode mode, std::vector<std::string> labels) {
  if (n < 0 || n > PointSet::kMaxWidth) {
    throw Error(Errc::kSizeLimitExceeded,
                "space has " + std::to_string(n) + " points; limit is 64");
  }
  const PointSet full = PointSet::full(n);
  for (const PointSet& u : family) {
    if (u.width() != n) {
      throw Error(Errc::kWidthMismatch, "family member " + u.to_string() +
                                            " has width " + std::to_string(u.width()) +
                                            ", expected " + std::to_string(n));
    }
  }

  if (mode == TopologyMode::kStrict) {
    std::vector<PointSet> members(family.begin(), family.end());
    members.push_back(PointSet::empty(n));
    members.push_back(full);
    std::unordered_set<std::uint64_t> present;
    for (const PointSet& u : members) present.insert(u.bits());
    auto show = [&](PointSet u) {
      if (labels.size() != static_cast<std::size_t>(n)) return u.to_string();
      return format_set(FiniteSpace::indiscrete(n).relabeled(labels), u);
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const PointSet u = members[i];
        const PointSet v = members[j];
        if (!present.contains((u | v).bits())) {
          throw Error(Errc::kNotATopology,
                      "not closed under union: " + show(u) + " | " + show(v) + " = " +
                          show(u | v) + " missing");
        }
        if (!present.contains((u & v).bits())) {
          throw Error(Errc::kNotATopology,
                      "not closed under intersection: " + show(u) + " & " + show(v) +
                          " = " + show(u & v) + " missing");
        }
      }
    }
  }

  // In both modes the smallest open set around p is the intersection of all
  // family members containing it.
  std::vector<PointSet> nbhds;
  nbhds.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    PointSet u = full;
    for (const PointSet& v : family) {
      if (v.contains(p)) u &= v;
    }
    nbhds.push_back(u);
  }
  return FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels));
}

std::string format_set(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  return "{" + join_labels(sp, a) + "}";
}

PointSet interior(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  PointSet out = sp.empty_set();
  a.for_each([&](int p) {
    if (sp.min_neighborhood(p).subset_of(a)) out = out.with(p);
  });
  return out;
}

PointSet closure(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  PointSet out = sp.empty_set();
  for (int p = 0; p < sp.size(); ++p) {
    if (sp.min_neighborhood(p).intersects(a)) out = out.with(p);
  }
  return out;
}

PointSet kernel(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  PointSet out = sp.empty_set();
  a.for_each([&](int p) { out |= sp.min_neighborhood(p); });
  return out;
}

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> assign)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), assign_(std::move(assign)) {
  if (static_cast<int>(assign_.size()) != domain_.size()) {
    throw Error(Errc::kInvalidArgument, "map assignment length differs from domain size");
  }
  for (int t : assign_) {
    if (t < 0 || t >= codomain_.size()) {
      throw Error(Errc::kInvalidArgument,
                  "map assigns point outside codomain: " + std::to_string(t));
    }
  }
}

SpaceMap SpaceMap::identity(const FiniteSpace& sp) {
  std::vector<int> assign(static_cast<std::size_t>(sp.size()));
  for (int p = 0; p < sp.size(); ++p) assign[static_cast<std::size_t>(p)] = p;
  return SpaceMap(sp, sp, std::move(assign));
}

std::string SpaceMap::to_string() const {
  std::string out;
  for (int p = 0; p < domain_.size(); ++p) {
    if (p > 0) out += ',';
    out += format_label(domain_.label(p));
    out += "->";
    out += format_label(codomain_.label((*this)(p)));
  }
  return out;
}

ProductSpace product(std::span<const FiniteSpace> factors) {
  if (factors.empty()) {
    throw Error(Errc::kInvalidArgument, "product needs at least one factor");
  }
  long long total = 1;
  for (const FiniteSpace& f : factors) {
    total *= f.size();
    if (total > PointSet::kMaxWidth) {
      throw Error(Errc::kSizeLimitExceeded, "product has more than 64 points");
    }
  }
  const int n = static_cast<int>(total);
  const std::size_t k = factors.size();

  // coords[t][i] is the i-th coordinate of tuple t.
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n), std::vector<int>(k));
  for (int t = 0; t < n; ++t) {
    int rest = t;
    for (std::size_t i = k; i-- > 0;) {
      coords[static_cast<std::size_t>(t)][i] = rest % factors[i].size();
      rest /= factors[i].size();
    }
  }

  std::vector<PointSet> nbhds;
  std::vector<std::string> labels;
  nbhds.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const auto& c = coords[static_cast<std::size_t>(t)];
    PointSet box = PointSet::empty(n);
    for (int s = 0; s < n; ++s) {
      const auto& d = coords[static_cast<std::size_t>(s)];
      bool inside = true;
      for (std::size_t i = 0; i < k && inside; ++i) {
        inside = factors[i].min_neighborhood(c[i]).contains(d[i]);
      }
      if (inside) box = box.with(s);
    }
    nbhds.push_back(box);
    std::string label;
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0) label += ',';
      label += factors[i].label(c[i]);
    }
    labels.push_back(std::move(label));
  }

  ProductSpace out{FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels)), {}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> assign;
    assign.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) assign.push_back(coords[static_cast<std::size_t>(t)][i]);
    out.projections.emplace_back(out.space, factors[i], std::move(assign));
  }
  return out;
}

SumSpace sum(std::span<const FiniteSpace> parts) {
  if (parts.empty()) {
    throw Error(Errc::kInvalidArgument, "sum needs at least one part");
  }
  int n = 0;
  for (const FiniteSpace& part : parts) {
    n += part.size();
    if (n > PointSet::kMaxWidth) {
      throw Error(Errc::kSizeLimitExceeded, "sum has more than 64 points");
    }
  }
  std::vector<PointSet> nbhds;
  std::vector<std::string> labels;
  std::vector<int> offsets;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const FiniteSpace& part = parts[i];
    offsets.push_back(offset);
    for (int p = 0; p < part.size(); ++p) {
      nbhds.emplace_back(n, part.min_neighborhood(p).bits() << offset);
      labels.push_back(std::to_string(i) + ":" + part.label(p));
    }
    offset += part.size();
  }
  SumSpace out{FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels)), {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> assign;
    for (int p = 0; p < parts[i].size(); ++p) assign.push_back(offsets[i] + p);
    out.injections.emplace_back(parts[i], out.space, std::move(assign));
  }
  return out;
}

FiniteSpace subspace(const FiniteSpace& sp, PointSet carrier) {
  require_member(sp, carrier);
  if (carrier.is_empty()) {
    throw Error(Errc::kEmptyCarrier, "subspace carrier is empty");
  }
  const std::vector<int> keep = carrier.indices();
  const int m = static_cast<int>(keep.size());
  std::vector<int> index_of(static_cast<std::size_t>(sp.size()), -1);
  for (int i = 0; i < m; ++i) index_of[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])] = i;

  std::vector<PointSet> nbhds;
  std::vector<std::string> labels;
  for (int p : keep) {
    PointSet u = PointSet::empty(m);
    (sp.min_neighborhood(p) & carrier).for_each([&](int q) {
      u = u.with(index_of[static_cast<std::size_t>(q)]);
    });
    nbhds.push_back(u);
    labels.push_back(sp.label(p));
  }
  return FiniteSpace::from_min_neighborhoods(std::move(nbhds), std::move(labels));
}

}  // namespace topocheck
