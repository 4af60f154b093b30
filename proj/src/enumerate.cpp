#include "topocheck/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>
#include <utility>

namespace topocheck {
namespace {

void check_range(int n, int limit, const char* what) {
  if (n < 1) {
    throw Error(Errc::kInvalidArgument, std::string(what) + ": point count must be >= 1");
  }
  if (n > limit) {
    throw Error(Errc::kSizeLimitExceeded,
                std::string(what) + " supports at most " + std::to_string(limit) +
                    " points, asked for " + std::to_string(n));
  }
}

/// rows[p] is the up-set of p: every q with p <= q. That is exactly the
/// minimal open neighbourhood of p.
using Rows = std::array<std::uint64_t, kMaxEnumerationPoints>;

class PreorderSearch {
 public:
  PreorderSearch(int n, std::function<void(const Rows&)> emit) : n_(n), emit_(std::move(emit)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) pairs_.emplace_back(i, j);
      }
    }
  }

  void run() {
    Rows rel{};
    Rows excluded{};
    for (int i = 0; i < n_; ++i) rel[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    visit(0, rel, excluded);
  }

 private:
  void visit(std::size_t k, const Rows& rel, Rows& excluded) {
    if (k == pairs_.size()) {
      emit_(rel);
      return;
    }
    const auto [i, j] = pairs_[k];
    const std::uint64_t bit_j = std::uint64_t{1} << j;
    if (rel[static_cast<std::size_t>(i)] & bit_j) {
      visit(k + 1, rel, excluded);
      return;
    }

    excluded[static_cast<std::size_t>(i)] |= bit_j;
    visit(k + 1, rel, excluded);
    excluded[static_cast<std::size_t>(i)] &= ~bit_j;

    // Adding i <= j forces a <= b for every a <= i and j <= b.
    Rows next = rel;
    const std::uint64_t up_j = rel[static_cast<std::size_t>(j)];
    for (int a = 0; a < n_; ++a) {
      auto& row = next[static_cast<std::size_t>(a)];
      if (row & (std::uint64_t{1} << i)) row |= up_j;
      if (row & excluded[static_cast<std::size_t>(a)]) return;
    }
    visit(k + 1, next, excluded);
  }

  int n_;
  std::function<void(const Rows&)> emit_;
  std::vector<std::pair<int, int>> pairs_;
};

FiniteSpace space_from_rows(int n, const Rows& rows) {
  std::vector<PointSet> nbhds;
  nbhds.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) nbhds.emplace_back(n, rows[static_cast<std::size_t>(p)]);
  return FiniteSpace::from_min_neighborhoods(std::move(nbhds));
}

}  // namespace

void enumerate_spaces(int n, const std::function<void(const FiniteSpace&)>& visit) {
  check_range(n, kMaxEnumerationPoints, "enumeration");
  PreorderSearch search(n, [&](const Rows& rows) { visit(space_from_rows(n, rows)); });
  search.run();
}

std::vector<FiniteSpace> enumerate_spaces(int n) {
  std::vector<FiniteSpace> out;
  enumerate_spaces(n, [&](const FiniteSpace& sp) { out.push_back(sp); });
  return out;
}

std::vector<FiniteSpace> enumerate_spaces_up_to(int n_max) {
  std::vector<FiniteSpace> out;
  for (int n = 1; n <= n_max; ++n) {
    enumerate_spaces(n, [&](const FiniteSpace& sp) { out.push_back(sp); });
  }
  return out;
}

std::uint64_t count_spaces(int n) {
  check_range(n, kMaxEnumerationPoints, "enumeration");
  std::uint64_t count = 0;
  PreorderSearch search(n, [&](const Rows&) { ++count; });
  search.run();
  return count;
}

std::vector<std::vector<std::uint64_t>> enumerate_families_naive(int n) {
  check_range(n, kMaxNaivePoints, "naive enumeration");
  const std::uint64_t full = PointSet::mask(n);
  // Candidate members: every subset other than the empty and full set.
  std::vector<std::uint64_t> middle;
  for (std::uint64_t m = 1; m < full; ++m) middle.push_back(m);

  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t choices = std::uint64_t{1} << middle.size();
  std::array<bool, std::size_t{1} << kMaxNaivePoints> member{};
  std::vector<std::uint64_t> family;
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    family.assign({0});
    member.fill(false);
    member[0] = member[full] = true;
    for (std::size_t b = 0; b < middle.size(); ++b) {
      if ((pick >> b) & 1U) {
        family.push_back(middle[b]);
        member[middle[b]] = true;
      }
    }
    family.push_back(full);
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < family.size() && closed; ++j) {
        closed = member[family[i] | family[j]] && member[family[i] & family[j]];
      }
    }
    if (closed) {
      std::sort(family.begin(), family.end());
      out.push_back(family);
    }
  }
  return out;
}

std::vector<FiniteSpace> enumerate_spaces_naive(int n) {
  std::vector<FiniteSpace> out;
  for (const auto& family : enumerate_families_naive(n)) {
    std::vector<PointSet> sets;
    for (std::uint64_t m : family) sets.emplace_back(n, m);
    out.push_back(validate_topology(n, sets));
  }
  return out;
}

std::uint64_t count_spaces_naive(int n) {
  return enumerate_families_naive(n).size();
}

}  // namespace topocheck
