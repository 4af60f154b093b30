#include "topocheck/search.hpp"

#include <array>

#include "topocheck/enumerate.hpp"
#include "topocheck/maps.hpp"
#include "topocheck/parallel.hpp"
#include "topocheck/set_classes.hpp"

namespace topocheck {
namespace {

template <typename Fn>
void for_each_subset(const FiniteSpace& sp, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) fn(PointSet(sp.size(), m));
}

/// A x A inside X x X, with X x X indexed row-major.
PointSet square(PointSet a) {
  const int n = a.width();
  PointSet out = PointSet::empty(n * n);
  a.for_each([&](int i) { a.for_each([&](int j) { out = out.with(i * n + j); }); });
  return out;
}

// product-sg-closed-failure

bool product_sg_closed_failure_holds(const Witness& w) {
  const PointSet a = w.sets.at(0);
  const std::array factors{w.space, w.space};
  const FiniteSpace squared = product(factors).space;
  return is_sg_closed(w.space, a) && !is_sg_closed(squared, square(a));
}

std::vector<Witness> product_sg_closed_failure_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  const std::array factors{sp, sp};
  const FiniteSpace squared = product(factors).space;
  for_each_subset(sp, [&](PointSet a) {
    if (is_sg_closed(sp, a) && !is_sg_closed(squared, square(a))) {
      out.push_back({sp, {a}, std::nullopt, "A sg-closed but A x A not sg-closed in X x X"});
    }
  });
  return out;
}

// hsg-not-nowhere-dense

bool hsg_not_nd_holds(const Witness& w) {
  const PointSet a = w.sets.at(0);
  return is_hsg_closed(w.space, a) && !is_nowhere_dense(w.space, a);
}

std::vector<Witness> hsg_not_nd_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  for_each_subset(sp, [&](PointSet a) {
    if (is_hsg_closed(sp, a) && !is_nowhere_dense(sp, a)) {
      out.push_back({sp, {a}, std::nullopt, "hsg-closed but not nowhere dense"});
    }
  });
  return out;
}

// g-open-not-sg-open

bool g_not_sg_holds(const Witness& w) {
  const PointSet a = w.sets.at(0);
  return is_g_open(w.space, a) && !is_sg_open(w.space, a);
}

std::vector<Witness> g_not_sg_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  for_each_subset(sp, [&](PointSet a) {
    if (is_g_open(sp, a) && !is_sg_open(sp, a)) {
      out.push_back({sp, {a}, std::nullopt, "g-open but not sg-open"});
    }
  });
  return out;
}

// beta-open-not-sg-open

bool beta_not_sg_holds(const Witness& w) {
  const PointSet a = w.sets.at(0);
  return is_beta_open(w.space, a) && !is_sg_open(w.space, a);
}

std::vector<Witness> beta_not_sg_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  for_each_subset(sp, [&](PointSet a) {
    if (is_beta_open(sp, a) && !is_sg_open(sp, a)) {
      out.push_back({sp, {a}, std::nullopt, "beta-open but not sg-open"});
    }
  });
  return out;
}

// projection-not-sg-irresolute: first projection X x X -> X pulls an
// sg-closed set back to a set that is not sg-closed.

bool projection_not_sg_irresolute_holds(const Witness& w) {
  if (!w.map) return false;
  const PointSet b = w.sets.at(0);
  return is_sg_closed(w.map->codomain(), b) &&
         !is_sg_closed(w.map->domain(), preimage(*w.map, b));
}

std::vector<Witness> projection_not_sg_irresolute_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  const std::array factors{sp, sp};
  const ProductSpace squared = product(factors);
  const SpaceMap& p = squared.projections.at(0);
  for_each_subset(sp, [&](PointSet b) {
    if (out.empty() && is_sg_closed(sp, b) && !is_sg_closed(squared.space, preimage(p, b))) {
      out.push_back({sp, {b}, p, "first projection X x X -> X is not sg-irresolute"});
    }
  });
  return out;
}

// hsg-preimage-failure: q : I x X -> I with I indiscrete on the same number
// of points; some hsg-closed S has a preimage that is not hsg-closed.

bool hsg_preimage_failure_holds(const Witness& w) {
  if (!w.map) return false;
  const PointSet s = w.sets.at(0);
  return is_hsg_closed(w.map->codomain(), s) && !is_hsg_closed(w.map->domain(), preimage(*w.map, s));
}

std::vector<Witness> hsg_preimage_failure_probe(const FiniteSpace& sp) {
  std::vector<Witness> out;
  const FiniteSpace coarse = FiniteSpace::indiscrete(sp.size()).relabeled(sp.labels());
  const std::array factors{coarse, sp};
  const ProductSpace prod = product(factors);
  const SpaceMap& q = prod.projections.at(0);
  for_each_subset(coarse, [&](PointSet s) {
    if (out.empty() && is_hsg_closed(coarse, s) && !is_hsg_closed(prod.space, preimage(q, s))) {
      out.push_back({sp, {s}, q, "projection from (X, indiscrete) x X does not preserve hsg-closed preimages"});
    }
  });
  return out;
}

constexpr std::array kQuests{
    Quest{"product-sg-closed-failure", "A sg-closed in X with A x A not sg-closed in X x X", 4,
          &product_sg_closed_failure_probe, &product_sg_closed_failure_holds},
    Quest{"hsg-not-nowhere-dense", "hsg-closed sets that are not nowhere dense", kMaxSpaceSearchPoints,
          &hsg_not_nd_probe, &hsg_not_nd_holds},
    Quest{"g-open-not-sg-open", "g-open sets that are not sg-open", kMaxSpaceSearchPoints,
          &g_not_sg_probe, &g_not_sg_holds},
    Quest{"beta-open-not-sg-open", "beta-open sets that are not sg-open", kMaxSpaceSearchPoints,
          &beta_not_sg_probe, &beta_not_sg_holds},
    Quest{"projection-not-sg-irresolute", "X with first projection X x X -> X not sg-irresolute", 3,
          &projection_not_sg_irresolute_probe, &projection_not_sg_irresolute_holds},
    Quest{"hsg-preimage-failure", "X where q : (X, indiscrete) x X -> (X, indiscrete) breaks hsg-closed preimages",
          3, &hsg_preimage_failure_probe, &hsg_preimage_failure_holds},
};

void check_n_max(int n_max, int limit) {
  if (n_max < 1) throw Error(Errc::kInvalidArgument, "search needs n_max >= 1");
  if (n_max > limit) {
    throw Error(Errc::kSizeLimitExceeded, "search supports n_max <= " + std::to_string(limit));
  }
}

template <typename Probe>
std::vector<Witness> run_search(int n_max, const SearchOptions& options, Probe&& probe) {
  const std::vector<FiniteSpace> spaces = enumerate_spaces_up_to(n_max);
  std::vector<std::vector<Witness>> found(spaces.size());
  parallel_for(spaces.size(), options.workers, [&](std::size_t i) { found[i] = probe(spaces[i]); });
  std::vector<Witness> out;
  for (auto& batch : found) {
    for (auto& w : batch) {
      if (options.limit && out.size() >= *options.limit) return out;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::string Witness::to_string() const {
  std::string out = "WITNESS space=" + space.canonical();
  for (const PointSet& s : sets) out += " set=" + format_set(space, s);
  if (map) out += " map=" + map->to_string();
  return out;
}

std::span<const Quest> quests() { return kQuests; }

const Quest* find_quest(std::string_view name) {
  for (const Quest& q : kQuests) {
    if (q.name == name) return &q;
  }
  return nullptr;
}

std::vector<Witness> search(const PropertyExpr& expr, const SearchOptions& options) {
  expr.check_identifiers();
  check_n_max(options.n_max, kMaxSpaceSearchPoints);
  return run_search(options.n_max, options, [&](const FiniteSpace& sp) {
    std::vector<Witness> out;
    if (expr.evaluate(sp)) out.push_back({sp, {}, std::nullopt, expr.to_string()});
    return out;
  });
}

std::vector<Witness> search(const Quest& quest, const SearchOptions& options) {
  check_n_max(options.n_max, quest.max_points);
  return run_search(options.n_max, options, quest.probe);
}

}  // namespace topocheck
