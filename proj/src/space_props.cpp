#include "topocheck/space_props.hpp"

#include <array>

#include "topocheck/set_classes.hpp"

namespace topocheck {

bool is_locally_indiscrete(const FiniteSpace& sp) {
  // Minimal neighbourhoods generate the topology, so it is enough that each
  // of them is closed.
  for (const PointSet& u : sp.min_neighborhoods()) {
    if (!sp.is_closed(u)) return false;
  }
  return true;
}

bool is_locally_indiscrete_by_singletons(const FiniteSpace& sp) {
  for (int p = 0; p < sp.size(); ++p) {
    if (!is_preopen(sp, PointSet::singleton(sp.size(), p))) return false;
  }
  return true;
}

bool is_locally_indiscrete_by_sg_open(const FiniteSpace& sp) {
  require_width(sp, kExhaustiveWidth, "sg-open subset scan");
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!is_sg_open(sp, PointSet(sp.size(), m))) return false;
  }
  return true;
}

bool is_indiscrete(const FiniteSpace& sp) {
  for (const PointSet& u : sp.min_neighborhoods()) {
    if (!u.is_full()) return false;
  }
  return true;
}

bool is_discrete(const FiniteSpace& sp) {
  for (const PointSet& u : sp.min_neighborhoods()) {
    if (u.size() != 1) return false;
  }
  return true;
}

bool is_hyperconnected(const FiniteSpace& sp) {
  // Every nonempty open set contains a minimal neighbourhood, so pairwise
  // intersection of those is enough.
  const auto nbhds = sp.min_neighborhoods();
  for (std::size_t i = 0; i < nbhds.size(); ++i) {
    for (std::size_t j = i + 1; j < nbhds.size(); ++j) {
      if (!nbhds[i].intersects(nbhds[j])) return false;
    }
  }
  return true;
}

bool is_quasi_hyperdisconnected(const FiniteSpace&) { return true; }

bool is_semi_hausdorff(const FiniteSpace& sp) {
  const int n = sp.size();
  if (n < 2) return true;
  require_width(sp, kExhaustiveWidth, "semi-open subset scan");
  const auto& semi_opens = semi_open_sets(sp);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      // Need U semi-open with p in U, and a semi-open V around q inside the
      // complement of U; the largest such V is sint(X - U).
      bool separated = false;
      for (const PointSet& u : semi_opens) {
        if (!u.contains(p) || u.contains(q)) continue;
        if (semi_interior(sp, u.complement()).contains(q)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_resolvable(const FiniteSpace& sp) {
  if (sp.size() == 0) {
    throw Error(Errc::kEmptyCarrier, "resolvability of the empty space");
  }
  require_width(sp, kExhaustiveWidth, "dense subset scan");
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    const PointSet d(sp.size(), m);
    if (is_dense(sp, d) && is_dense(sp, d.complement())) return true;
  }
  return false;
}

bool is_strongly_irresolvable(const FiniteSpace& sp) {
  for (const PointSet& u : sp.opens()) {
    if (u.is_empty()) continue;
    if (is_resolvable(subspace(sp, u))) return false;
  }
  return true;
}

bool beta_subset_of_sg(const FiniteSpace& sp) {
  require_width(sp, kExhaustiveWidth, "beta-open subset scan");
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    const PointSet a(sp.size(), m);
    if (is_beta_open(sp, a) && !is_sg_open(sp, a)) return false;
  }
  return true;
}

bool is_dense_in_itself(const FiniteSpace& sp) {
  for (const PointSet& u : sp.min_neighborhoods()) {
    if (u.size() == 1) return false;
  }
  return true;
}

bool is_singletons_locally_dense(const FiniteSpace& sp) {
  return is_locally_indiscrete_by_singletons(sp);
}

namespace {

constexpr std::array kPredicates{
    SpacePredicate{"locally_indiscrete", &is_locally_indiscrete, "every open set is closed"},
    SpacePredicate{"indiscrete", &is_indiscrete, "only the empty and full set are open"},
    SpacePredicate{"discrete", &is_discrete, "every subset is open"},
    SpacePredicate{"hyperconnected", &is_hyperconnected, "every nonempty open set is dense"},
    SpacePredicate{"quasi_hyperdisconnected", &is_quasi_hyperdisconnected,
                   "every infinite open subspace is hyperdisconnected"},
    SpacePredicate{"semi_hausdorff", &is_semi_hausdorff,
                   "distinct points have disjoint semi-open neighbourhoods"},
    SpacePredicate{"resolvable", &is_resolvable, "union of two disjoint dense sets"},
    SpacePredicate{"strongly_irresolvable", &is_strongly_irresolvable,
                   "no nonempty open subspace is resolvable"},
    SpacePredicate{"beta_subset_of_sg", &beta_subset_of_sg, "every beta-open set is sg-open"},
    SpacePredicate{"dense_in_itself", &is_dense_in_itself, "no singleton is open"},
    SpacePredicate{"singletons_locally_dense", &is_singletons_locally_dense, "every singleton is locally dense"},
};

}  // namespace

std::span<const SpacePredicate> space_predicates() { return kPredicates; }

const SpacePredicate* find_space_predicate(std::string_view name) {
  for (const SpacePredicate& p : kPredicates) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace topocheck
