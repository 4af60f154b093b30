#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "topocheck/report.hpp"

namespace topocheck {

enum class Suite { kAll, kFixtures, kLemmas, kProducts, kMaps, kE1, kR1 };

std::optional<Suite> parse_suite(std::string_view name);

/// Three-point fixture reproductions: sg-closedness of {b,c}, its square,
/// its projection preimage, and the hsg preimage under the projection from
/// (indiscrete x fixture).
std::vector<CheckResult> verify_fixtures();

/// Subset-level equivalences over every topology on at most 4 points, the
/// enumeration cross-check, and the space-level predicate invariants.
std::vector<CheckResult> verify_lemmas(int workers);

/// Box characterizations for semi-open and preopen products, and the
/// indiscrete-factor formulas, over all factors with at most 3 points.
std::vector<CheckResult> verify_products(int workers);

/// Map-property implications over all 3-point topology pairs and all 27
/// point maps, plus irresoluteness of product projections.
std::vector<CheckResult> verify_maps(int workers);

std::vector<CheckResult> verify_suite(Suite suite, int workers);

}  // namespace topocheck
