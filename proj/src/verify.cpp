#include "topocheck/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "topocheck/enumerate.hpp"
#include "topocheck/fixtures.hpp"
#include "topocheck/maps.hpp"
#include "topocheck/parallel.hpp"
#include "topocheck/search.hpp"
#include "topocheck/set_classes.hpp"
#include "topocheck/space_props.hpp"
#include "topocheck/tail_space.hpp"

namespace topocheck {

std::string CheckResult::to_string() const {
  std::string out = "CHECK " + name + (passed ? " PASS" : " FAIL");
  if (!detail.empty()) out += " " + detail;
  return out;
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::kAll;
  if (name == "fixtures") return Suite::kFixtures;
  if (name == "lemmas") return Suite::kLemmas;
  if (name == "products") return Suite::kProducts;
  if (name == "maps") return Suite::kMaps;
  if (name == "e1") return Suite::kE1;
  if (name == "r1") return Suite::kR1;
  return std::nullopt;
}

namespace {

using Failure = std::optional<std::string>;

/// Probe over one item (space, pair, ...) returning its first counterexample.
template <typename Item>
struct ItemCheck {
  std::string name;
  std::function<Failure(const Item&)> probe;
};

/// Runs every check on every item; the reported counterexample is the first
/// one in item order, whatever the scheduling.
template <typename Item>
std::vector<CheckResult> run_checks(const std::vector<Item>& items,
                                    const std::vector<ItemCheck<Item>>& checks, int workers,
                                    const std::string& pass_detail) {
  std::vector<std::vector<Failure>> found(items.size());
  parallel_for(items.size(), workers, [&](std::size_t i) {
    found[i].reserve(checks.size());
    for (const auto& c : checks) found[i].push_back(c.probe(items[i]));
  });
  std::vector<CheckResult> out;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckResult r{checks[c].name, true, pass_detail};
    for (const auto& per_item : found) {
      if (per_item[c]) {
        r.passed = false;
        r.detail = *per_item[c];
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string at(const FiniteSpace& sp, PointSet a) {
  return "space=" + sp.canonical() + " set=" + format_set(sp, a);
}

std::string at(const FiniteSpace& sp) { return "space=" + sp.canonical(); }

/// First subset A of `sp` with !ok(A).
template <typename Ok>
Failure first_subset_failure(const FiniteSpace& sp, Ok&& ok) {
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    const PointSet a(sp.size(), m);
    if (!ok(a)) return at(sp, a);
  }
  return std::nullopt;
}

template <typename Fn>
void for_each_subset(const FiniteSpace& sp, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << sp.size();
  for (std::uint64_t m = 0; m < count; ++m) fn(PointSet(sp.size(), m));
}

// Definitional routes, scanning subsets directly instead of using the
// per-space tables.

PointSet semi_interior_by_scan(const FiniteSpace& sp, PointSet a) {
  PointSet out = sp.empty_set();
  for_each_subset(sp, [&](PointSet s) {
    if (s.subset_of(a) && is_semi_open(sp, s)) out |= s;
  });
  return out;
}

PointSet semi_closure_by_scan(const FiniteSpace& sp, PointSet a) {
  PointSet out = sp.full_set();
  for_each_subset(sp, [&](PointSet s) {
    if (a.subset_of(s) && is_semi_closed(sp, s)) out &= s;
  });
  return out;
}

PointSet semi_kernel_by_scan(const FiniteSpace& sp, PointSet a) {
  PointSet out = sp.full_set();
  for_each_subset(sp, [&](PointSet s) {
    if (a.subset_of(s) && is_semi_open(sp, s)) out &= s;
  });
  return out;
}

bool sg_open_by_scan(const FiniteSpace& sp, PointSet a) {
  const PointSet sint = semi_interior_by_scan(sp, a);
  bool ok = true;
  for_each_subset(sp, [&](PointSet f) {
    if (f.subset_of(a) && is_semi_closed(sp, f) && !f.subset_of(sint)) ok = false;
  });
  return ok;
}

bool g_open_by_scan(const FiniteSpace& sp, PointSet a) {
  const PointSet inside = interior(sp, a);
  for (const PointSet& u : sp.opens()) {
    const PointSet f = u.complement();
    if (f.subset_of(a) && !f.subset_of(inside)) return false;
  }
  return true;
}

/// A lies in some regular closed R with the closure of A inside R equal
/// to R.
bool beta_open_by_regular_closed(const FiniteSpace& sp, PointSet a) {
  bool found = false;
  for_each_subset(sp, [&](PointSet r) {
    if (found || !a.subset_of(r)) return;
    if (closure(sp, interior(sp, r)) != r) return;
    if ((closure(sp, a) & r) == r) found = true;
  });
  return found;
}

std::vector<ItemCheck<FiniteSpace>> lemma_space_checks() {
  std::vector<ItemCheck<FiniteSpace>> checks;
  checks.push_back({"lemma-dichotomy", [](const FiniteSpace& sp) -> Failure {
    for (int p = 0; p < sp.size(); ++p) {
      const PointSet s = PointSet::singleton(sp.size(), p);
      if (is_nowhere_dense(sp, s) == is_preopen(sp, s)) return at(sp, s);
    }
    return std::nullopt;
  }});
  checks.push_back({"lemma-locally-indiscrete", [](const FiniteSpace& sp) -> Failure {
    const bool a = is_locally_indiscrete(sp);
    if (a != is_locally_indiscrete_by_singletons(sp) || a != is_locally_indiscrete_by_sg_open(sp)) {
      return at(sp);
    }
    return std::nullopt;
  }});
  checks.push_back({"lemma-hsg-criterion", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      return is_hsg_closed(sp, a) == is_hsg_closed_by_definition(sp, a);
    });
  }});
  checks.push_back({"lemma-sg-duality", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      return is_sg_closed(sp, a) == is_sg_open(sp, a.complement());
    });
  }});
  checks.push_back({"lemma-g-duality", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      return is_g_open(sp, a) == is_g_closed(sp, a.complement());
    });
  }});
  checks.push_back({"lemma-nd-implies-hsg", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      return !is_nowhere_dense(sp, a) || is_hsg_closed(sp, a);
    });
  }});
  checks.push_back({"classes-implications", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      const ClassReport r = classify(sp, a);
      const PointSet sint = semi_interior(sp, a);
      const PointSet scl = semi_closure(sp, a);
      return (!r.open || r.semi_open) && (!r.semi_open || *r.sg_open) &&
             (!(r.semi_open || r.preopen) || r.beta_open) && (!r.nowhere_dense || *r.hsg_closed) &&
             (!r.regular_open || r.open) && interior(sp, a).subset_of(sint) && sint.subset_of(a) &&
             a.subset_of(scl) && scl.subset_of(closure(sp, a)) && semi_closure(sp, scl) == scl;
    });
  }});
  checks.push_back({"semi-open-union-closed", [](const FiniteSpace& sp) -> Failure {
    const auto& family = semi_open_sets(sp);
    for (const PointSet& u : family) {
      for (const PointSet& v : family) {
        if (!is_semi_open(sp, u | v)) return at(sp, u | v);
      }
    }
    return std::nullopt;
  }});
  checks.push_back({"operators-core", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      const PointSet in = interior(sp, a);
      const PointSet cl = closure(sp, a);
      PointSet union_of_opens = sp.empty_set();
      for (const PointSet& u : sp.opens()) {
        if (u.subset_of(a)) union_of_opens |= u;
      }
      return in.subset_of(a) && a.subset_of(cl) && interior(sp, in) == in &&
             closure(sp, cl) == cl && cl == interior(sp, a.complement()).complement() &&
             a.subset_of(kernel(sp, a)) && sp.is_open(kernel(sp, a)) && in == union_of_opens;
    });
  }});
  checks.push_back({"semi-operators-definitional", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) {
      return semi_interior(sp, a) == semi_interior_by_scan(sp, a) &&
             semi_closure(sp, a) == semi_closure_by_scan(sp, a) &&
             semi_kernel(sp, a) == semi_kernel_by_scan(sp, a);
    });
  }});
  checks.push_back({"sg-open-definitional", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) { return is_sg_open(sp, a) == sg_open_by_scan(sp, a); });
  }});
  checks.push_back({"g-open-definitional", [](const FiniteSpace& sp) {
    return first_subset_failure(sp, [&](PointSet a) { return is_g_open(sp, a) == g_open_by_scan(sp, a); });
  }});
  checks.push_back({"beta-open-routes", [](const FiniteSpace& sp) -> Failure {
    if (sp.size() > 3) return std::nullopt;
    return first_subset_failure(sp, [&](PointSet a) {
      return is_beta_open(sp, a) == beta_open_by_regular_closed(sp, a);
    });
  }});
  checks.push_back({"semi-hausdorff-not-hyperconnected", [](const FiniteSpace& sp) -> Failure {
    if (sp.size() >= 2 && is_semi_hausdorff(sp) && is_hyperconnected(sp)) return at(sp);
    return std::nullopt;
  }});
  return checks;
}

std::string canonical_key(const FiniteSpace& sp) {
  std::string key = std::to_string(sp.size()) + ":";
  for (const PointSet& u : sp.opens()) key += std::to_string(u.bits()) + ",";
  return key;
}

std::vector<CheckResult> enumeration_checks() {
  std::vector<CheckResult> out;
  constexpr std::array<std::uint64_t, 5> kCounts{0, 1, 4, 29, 355};
  for (int n = 1; n <= kMaxNaivePoints; ++n) {
    const std::string name = "enumeration-oracle-n" + std::to_string(n);
    std::set<std::string> fast;
    std::vector<std::string> fast_order;
    enumerate_spaces(n, [&](const FiniteSpace& sp) {
      fast.insert(canonical_key(sp));
      fast_order.push_back(canonical_key(sp));
    });
    std::set<std::string> naive;
    for (const auto& family : enumerate_families_naive(n)) {
      std::vector<PointSet> sets;
      for (std::uint64_t m : family) sets.emplace_back(n, m);
      std::sort(sets.begin(), sets.end(), PointSet::CanonicalLess{});
      std::string key = std::to_string(n) + ":";
      for (const PointSet& u : sets) key += std::to_string(u.bits()) + ",";
      naive.insert(key);
    }
    const bool ok = fast == naive && fast.size() == fast_order.size() &&
                    fast.size() == kCounts[static_cast<std::size_t>(n)];
    out.push_back({name, ok,
                   "count=" + std::to_string(fast_order.size()) + " oracle=" + std::to_string(naive.size())});
  }
  // Pinned from the first run of the preorder enumerator.
  constexpr std::uint64_t kCountN5 = 6942;
  const std::uint64_t n5 = count_spaces(5);
  out.push_back({"enumeration-count-n5", n5 == kCountN5, "count=" + std::to_string(n5)});
  bool refused = false;
  try {
    enumerate_families_naive(5);
  } catch (const Error& e) {
    refused = e.code() == Errc::kSizeLimitExceeded;
  }
  out.push_back({"enumeration-oracle-n5-refuses", refused, {}});
  return out;
}

CheckResult hsg_not_nd_witness_check() {
  const Quest* quest = find_quest("hsg-not-nowhere-dense");
  const std::vector<Witness> found = search(*quest, SearchOptions{2, std::nullopt, 1});
  const FiniteSpace pair = FiniteSpace::indiscrete(2);
  const bool has_pair = std::any_of(found.begin(), found.end(), [&](const Witness& w) {
    return w.space == pair && w.sets.at(0) == PointSet::singleton(2, 0);
  });
  const bool rechecked = std::all_of(found.begin(), found.end(), quest->holds);
  return {"lemma-hsg-not-nd-witness", has_pair && rechecked,
          "witnesses=" + std::to_string(found.size()) +
              (found.empty() ? "" : " first: " + found.front().to_string())};
}

CheckResult sum_beta_check() {
  std::vector<FiniteSpace> li;
  std::vector<FiniteSpace> si;
  for (const FiniteSpace& sp : enumerate_spaces_up_to(3)) {
    if (is_locally_indiscrete(sp)) li.push_back(sp);
    if (is_strongly_irresolvable(sp)) si.push_back(sp);
  }
  std::size_t sums = 0;
  for (const FiniteSpace& a : li) {
    for (const FiniteSpace& b : si) {
      const std::array parts{a, b};
      const FiniteSpace s = sum(parts).space;
      ++sums;
      if (!beta_subset_of_sg(s)) return {"sum-li-si-beta-sg", false, at(s)};
    }
  }
  return {"sum-li-si-beta-sg", true, "sums=" + std::to_string(sums)};
}

// Products.

struct SpacePair {
  FiniteSpace x;
  FiniteSpace y;
};

PointSet box(const FiniteSpace& x, const FiniteSpace& y, PointSet a, PointSet b) {
  PointSet out = PointSet::empty(x.size() * y.size());
  a.for_each([&](int i) { b.for_each([&](int j) { out = out.with(i * y.size() + j); }); });
  return out;
}

std::vector<ItemCheck<SpacePair>> box_checks() {
  auto box_check = [](std::string name, bool (*pred)(const FiniteSpace&, PointSet)) {
    return ItemCheck<SpacePair>{std::move(name), [pred](const SpacePair& pr) -> Failure {
      const std::array factors{pr.x, pr.y};
      const FiniteSpace xy = product(factors).space;
      const std::uint64_t nx = std::uint64_t{1} << pr.x.size();
      const std::uint64_t ny = std::uint64_t{1} << pr.y.size();
      for (std::uint64_t ma = 1; ma < nx; ++ma) {
        const PointSet a(pr.x.size(), ma);
        const bool pa = pred(pr.x, a);
        for (std::uint64_t mb = 1; mb < ny; ++mb) {
          const PointSet b(pr.y.size(), mb);
          const PointSet ab = box(pr.x, pr.y, a, b);
          if (pred(xy, ab) != (pa && pred(pr.y, b))) return at(xy, ab);
        }
      }
      return std::nullopt;
    }};
  };
  return {box_check("product-box-semi-open", &is_semi_open),
          box_check("product-box-preopen", &is_preopen)};
}

std::vector<ItemCheck<SpacePair>> indiscrete_factor_checks() {
  std::vector<ItemCheck<SpacePair>> checks;
  checks.push_back({"indiscrete-factor-int-cl", [](const SpacePair& pr) {
    const std::array factors{pr.x, pr.y};
    const ProductSpace xy = product(factors);
    const SpaceMap& p = xy.projections[0];
    return first_subset_failure(xy.space, [&](PointSet a) {
      const PointSet lhs = interior(xy.space, closure(xy.space, a));
      const PointSet rhs = preimage(p, interior(pr.x, closure(pr.x, image(p, a))));
      return lhs == rhs;
    });
  }});
  checks.push_back({"indiscrete-factor-hsg-transfer", [](const SpacePair& pr) {
    const std::array factors{pr.x, pr.y};
    const ProductSpace xy = product(factors);
    const SpaceMap& p = xy.projections[0];
    return first_subset_failure(xy.space, [&](PointSet a) {
      return is_hsg_closed(xy.space, a) == is_hsg_closed(pr.x, image(p, a));
    });
  }});
  return checks;
}

// Maps.

struct MapTally {
  std::vector<Failure> failures;
  std::array<std::size_t, 4> hypotheses{};
  std::size_t maps = 0;
  Failure condition_counterexample;
};

constexpr std::array<std::string_view, 3> kMapCheckNames{
    "maps-open-continuous-surjective-pre-semi-open",
    "maps-open-continuous-delta-open",
    "maps-hsg-preimage",
};

MapTally tally_maps_from(const FiniteSpace& x, const std::vector<FiniteSpace>& codomains) {
  MapTally t;
  t.failures.resize(kMapCheckNames.size());
  for (const FiniteSpace& y : codomains) {
    const bool condition_codomain = is_dense_in_itself(y) && is_singletons_locally_dense(y);
    std::vector<int> assign(static_cast<std::size_t>(x.size()), 0);
    for (;;) {
      const SpaceMap f(x, y, assign);
      const MapReport r = map_classify(f);
      ++t.maps;
      auto note = [&](std::size_t c) {
        if (!t.failures[c]) t.failures[c] = "map " + at(x) + " -> " + at(y) + " f=" + f.to_string();
      };
      if (r.open && r.continuous && r.surjective) {
        ++t.hypotheses[0];
        if (!r.pre_semi_open) note(0);
      }
      if (r.open && r.continuous) {
        ++t.hypotheses[1];
        if (!r.delta_open) note(1);
      }
      if (r.almost_open && r.continuous && r.anti_delta_open && r.surjective) {
        ++t.hypotheses[2];
        if (!preimage_preserves_hsg(f)) note(2);
      }
      if (condition_codomain) {
        ++t.hypotheses[3];
        if (!r.anti_delta_open && !t.condition_counterexample) {
          t.condition_counterexample = "map " + at(x) + " -> " + at(y) + " f=" + f.to_string();
        }
      }
      std::size_t i = 0;
      while (i < assign.size() && ++assign[i] == y.size()) assign[i++] = 0;
      if (i == assign.size()) break;
    }
  }
  return t;
}

std::vector<CheckResult> map_pair_checks(int workers) {
  const std::vector<FiniteSpace> spaces = enumerate_spaces(3);
  std::vector<MapTally> tallies(spaces.size());
  parallel_for(spaces.size(), workers, [&](std::size_t i) { tallies[i] = tally_maps_from(spaces[i], spaces); });

  std::size_t maps = 0;
  std::array<std::size_t, 4> hyp{};
  for (const MapTally& t : tallies) {
    maps += t.maps;
    for (std::size_t h = 0; h < hyp.size(); ++h) hyp[h] += t.hypotheses[h];
  }
  std::vector<CheckResult> out;
  for (std::size_t c = 0; c < kMapCheckNames.size(); ++c) {
    CheckResult r{std::string(kMapCheckNames[c]), true,
                  "maps=" + std::to_string(maps) + " hypothesis=" + std::to_string(hyp[c])};
    for (const MapTally& t : tallies) {
      if (t.failures[c]) {
        r.passed = false;
        r.detail = *t.failures[c];
        break;
      }
    }
    out.push_back(std::move(r));
  }
  // Dense-in-itself codomains whose singletons are all locally dense still
  // admit maps that are not anti-delta-open; passes once one is found.
  CheckResult condition{"maps-anti-delta-codomain-condition-refuted", false,
                        "codomain-maps=" + std::to_string(hyp[3])};
  for (const MapTally& t : tallies) {
    if (t.condition_counterexample) {
      condition.passed = true;
      condition.detail = *t.condition_counterexample;
      break;
    }
  }
  out.push_back(std::move(condition));
  return out;
}

std::vector<CheckResult> projection_checks(int workers) {
  const std::vector<FiniteSpace> spaces = enumerate_spaces_up_to(3);
  std::vector<SpacePair> pairs;
  for (const FiniteSpace& x : spaces) {
    for (const FiniteSpace& y : spaces) pairs.push_back({x, y});
  }
  struct Result {
    Failure not_irresolute;
    Failure not_gs_irresolute;
    std::size_t not_sg_irresolute = 0;
  };
  std::vector<Result> results(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t i) {
    const std::array factors{pairs[i].x, pairs[i].y};
    const ProductSpace xy = product(factors);
    for (const SpaceMap& p : xy.projections) {
      const MapReport r = map_classify(p);
      const std::string where = "projection of " + at(xy.space) + " onto " + at(p.codomain());
      if (!r.irresolute && !results[i].not_irresolute) results[i].not_irresolute = where;
      if (!r.gs_irresolute && !results[i].not_gs_irresolute) results[i].not_gs_irresolute = where;
      if (!r.sg_irresolute) ++results[i].not_sg_irresolute;
    }
  });
  CheckResult irresolute{"maps-projections-irresolute", true, "projections=" + std::to_string(2 * pairs.size())};
  CheckResult gs{"maps-projections-gs-irresolute", true, irresolute.detail};
  std::size_t not_sg = 0;
  for (const Result& r : results) {
    if (r.not_irresolute && irresolute.passed) irresolute = {irresolute.name, false, *r.not_irresolute};
    if (r.not_gs_irresolute && gs.passed) gs = {gs.name, false, *r.not_gs_irresolute};
    not_sg += r.not_sg_irresolute;
  }

  const FiniteSpace e = fixtures::three_point();
  const std::array square{e, e};
  const bool fixture_fails = !map_classify(product(square).projections[0]).sg_irresolute;
  CheckResult sg{"maps-projection-not-sg-irresolute", fixture_fails && not_sg > 0,
                 "fixture-projection-sg-irresolute=" + std::string(fixture_fails ? "false" : "true") +
                     " failing-projections=" + std::to_string(not_sg)};
  return {irresolute, gs, sg};
}

}  // namespace

std::vector<CheckResult> verify_fixtures() {
  const FiniteSpace tau = fixtures::three_point();
  const PointSet a = PointSet::of(3, {1, 2});
  std::vector<CheckResult> out;

  out.push_back({"fixture-sg-closed", is_sg_closed(tau, a), "A=" + format_set(tau, a)});

  const std::array square{tau, tau};
  const ProductSpace xx = product(square);
  const PointSet aa = box(tau, tau, a, a);
  const PointSet scl = semi_closure(xx.space, aa);
  out.push_back({"fixture-square-not-sg-closed", !is_sg_closed(xx.space, aa) && scl.is_full(),
                 "scl(AxA)=" + std::string(scl.is_full() ? "full" : format_set(xx.space, scl)) +
                     " size=" + std::to_string(scl.size())});

  const PointSet pre = preimage(xx.projections[0], a);
  out.push_back({"fixture-projection-preimage-not-sg-closed", !is_sg_closed(xx.space, pre),
                 "preimage=" + format_set(xx.space, pre)});

  const FiniteSpace sigma = FiniteSpace::indiscrete(3).relabeled({"a", "b", "c"});
  const std::array mixed{sigma, tau};
  const ProductSpace st = product(mixed);
  const PointSet s = PointSet::of(3, {0, 1});
  const PointSet qs = preimage(st.projections[0], s);
  out.push_back({"fixture-hsg-preimage", is_hsg_closed(sigma, s) && !is_hsg_closed(st.space, qs),
                 "S=" + format_set(sigma, s) + " N=" + format_set(st.space, nd_singletons(st.space))});
  return out;
}

std::vector<CheckResult> verify_lemmas(int workers) {
  std::vector<FiniteSpace> spaces = enumerate_spaces_up_to(4);
  std::vector<CheckResult> out =
      run_checks(spaces, lemma_space_checks(), workers, "spaces=" + std::to_string(spaces.size()));
  out.push_back(hsg_not_nd_witness_check());
  out.push_back(sum_beta_check());
  for (CheckResult& r : enumeration_checks()) out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> verify_products(int workers) {
  const std::vector<FiniteSpace> small = enumerate_spaces_up_to(3);
  std::vector<SpacePair> pairs;
  for (const FiniteSpace& x : small) {
    for (const FiniteSpace& y : small) pairs.push_back({x, y});
  }
  std::vector<CheckResult> out =
      run_checks(pairs, box_checks(), workers, "pairs=" + std::to_string(pairs.size()));

  std::vector<SpacePair> with_indiscrete;
  for (const FiniteSpace& x : small) {
    for (int k = 1; k <= 3; ++k) with_indiscrete.push_back({x, FiniteSpace::indiscrete(k)});
  }
  for (CheckResult& r : run_checks(with_indiscrete, indiscrete_factor_checks(), workers,
                                   "pairs=" + std::to_string(with_indiscrete.size()))) {
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> verify_maps(int workers) {
  std::vector<CheckResult> out = map_pair_checks(workers);
  for (CheckResult& r : projection_checks(workers)) out.push_back(std::move(r));
  return out;
}

std::vector<CheckResult> verify_suite(Suite suite, int workers) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    for (CheckResult& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kFixtures) append(verify_fixtures());
  if (all || suite == Suite::kLemmas) append(verify_lemmas(workers));
  if (all || suite == Suite::kProducts) append(verify_products(workers));
  if (all || suite == Suite::kMaps) append(verify_maps(workers));
  if (all || suite == Suite::kE1) append(verify_e1());
  if (all || suite == Suite::kR1) append(verify_r1_growth());
  return out;
}

}  // namespace topocheck
