#pragma once

#include <span>
#include <string_view>

#include "topocheck/space.hpp"

namespace topocheck {

/// Every open set is closed.
bool is_locally_indiscrete(const FiniteSpace& sp);
/// Alternate routes for the same property, kept for cross-checking.
bool is_locally_indiscrete_by_singletons(const FiniteSpace& sp);
bool is_locally_indiscrete_by_sg_open(const FiniteSpace& sp);

bool is_indiscrete(const FiniteSpace& sp);
bool is_discrete(const FiniteSpace& sp);

bool is_hyperconnected(const FiniteSpace& sp);
/// Vacuously true on finite carriers: there is no infinite open subspace.
bool is_quasi_hyperdisconnected(const FiniteSpace& sp);
/// One-point and empty spaces pass vacuously.
bool is_semi_hausdorff(const FiniteSpace& sp);

/// Throws EmptyCarrier for the empty space.
bool is_resolvable(const FiniteSpace& sp);
bool is_strongly_irresolvable(const FiniteSpace& sp);

/// Every beta-open subset is sg-open.
bool beta_subset_of_sg(const FiniteSpace& sp);

/// No singleton is open.
bool is_dense_in_itself(const FiniteSpace& sp);
/// Every singleton is preopen, i.e. locally dense.
bool is_singletons_locally_dense(const FiniteSpace& sp);

struct SpacePredicate {
  std::string_view name;
  bool (*eval)(const FiniteSpace&);
  std::string_view summary;
};

/// Registered predicates, by snake_case name. These are the identifiers of
/// the query language.
std::span<const SpacePredicate> space_predicates();
const SpacePredicate* find_space_predicate(std::string_view name);

}  // namespace topocheck
