#include <array>
#include <random>

#include "topocheck/set_classes.hpp"
#include "topocheck/tail_space.hpp"

namespace topocheck {
namespace {

using Value = TailSet::Value;

constexpr Value kSingletonRange = 1000;
constexpr int kExhaustiveWindow = 10;
constexpr int kRandomSamples = 10000;

/// Every set whose finite part lies in [1, kExhaustiveWindow] with every
/// possible tail start up to kExhaustiveWindow + 1, followed by a seeded
/// random sample with larger members.
std::vector<TailSet> sample_algebra() {
  std::vector<TailSet> out;
  for (std::uint32_t m = 0; m < (1U << kExhaustiveWindow); ++m) {
    std::vector<Value> finite;
    for (int b = 0; b < kExhaustiveWindow; ++b) {
      if ((m >> b) & 1U) finite.push_back(static_cast<Value>(b + 1));
    }
    out.push_back(TailSet::finite(finite));
    for (Value t = 1; t <= kExhaustiveWindow + 1; ++t) out.push_back(TailSet::make(finite, t));
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<Value> value(1, 500);
  std::uniform_int_distribution<int> count(0, 8);
  std::bernoulli_distribution has_tail(0.5);
  for (int i = 0; i < kRandomSamples; ++i) {
    std::vector<Value> finite(static_cast<std::size_t>(count(rng)));
    for (Value& v : finite) v = value(rng);
    std::optional<Value> tail;
    if (has_tail(rng)) tail = value(rng);
    out.push_back(TailSet::make(std::move(finite), tail));
  }
  return out;
}

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult check_singletons_nowhere_dense() {
  const char* name = "e1-singletons-nowhere-dense";
  for (Value x = 1; x <= kSingletonRange; ++x) {
    if (!tail_classify(TailSet::singleton(x)).nowhere_dense) {
      return fail(name, "singleton " + std::to_string(x));
    }
  }
  const TailSet nd = tail_nd_singletons();
  if (!nd.is_naturals()) return fail(name, "N(X) = " + nd.to_string());
  return pass(name, "N(X)=" + nd.to_string());
}

CheckResult check_semi_open_cofinite(const std::vector<TailSet>& algebra) {
  const char* name = "e1-semi-open-cofinite";
  for (const TailSet& a : algebra) {
    if (a.is_empty()) {
      if (!tail_classify(a).semi_open) return fail(name, "empty set not semi-open");
      continue;
    }
    const bool cofinite = a.complement().is_finite();
    if (tail_classify(a).semi_open != cofinite) return fail(name, "set " + a.to_string());
  }
  return pass(name, "sets=" + std::to_string(algebra.size()));
}

CheckResult check_hsg_finite(const std::vector<TailSet>& algebra) {
  const char* name = "e1-hsg-finite";
  for (const TailSet& a : algebra) {
    if (tail_classify(a).hsg_closed != a.is_finite()) return fail(name, "set " + a.to_string());
  }
  return pass(name, "sets=" + std::to_string(algebra.size()));
}

/// Non-representable infinite sets meet no finite initial segment fully, so
/// the argument extends once every proper closed set is seen to be a finite
/// initial segment.
CheckResult check_proper_closed_finite(const std::vector<TailSet>& algebra) {
  const char* name = "e1-proper-closed-sets-finite";
  for (const TailSet& a : algebra) {
    if (tail_is_closed(a) && !a.is_naturals()) {
      const bool segment = a.is_empty() ||
                           (a.finite_part().size() >= 2 &&
                            a == TailSet::initial_segment(a.finite_part().back()));
      if (!segment) return fail(name, "closed set " + a.to_string());
    }
    if (!a.is_finite() && !tail_closure(a).is_naturals()) {
      return fail(name, "infinite set with proper closure " + a.to_string());
    }
  }
  return pass(name);
}

CheckResult check_go_compact_fails() {
  const char* name = "e1-go-compact-fails";
  for (Value x = 1; x <= kSingletonRange; ++x) {
    if (!tail_is_g_open(TailSet::singleton(x))) {
      return fail(name, "singleton " + std::to_string(x) + " not g-open");
    }
  }
  // Any finite subfamily of the singleton cover has a finite union.
  TailSet covered;
  for (Value x = 1; x <= kSingletonRange; ++x) {
    covered = covered | TailSet::singleton(x);
    if (!covered.is_finite() || covered.is_naturals()) {
      return fail(name, "first " + std::to_string(x) + " singletons cover everything");
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Value> value(1, 1'000'000);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Value> picks(16);
    for (Value& v : picks) v = value(rng);
    const TailSet u = TailSet::finite(picks);
    if (!u.is_finite() || u.is_naturals()) return fail(name, "finite subfamily covers: " + u.to_string());
  }
  return pass(name, "singletons 1.." + std::to_string(kSingletonRange) + " g-open; no finite subcover");
}

CheckResult check_truncation(int window) {
  const std::string name = "e1-truncation-consistency";
  const FiniteSpace trunc = tail_truncation(window);
  const Value w = static_cast<Value>(window);
  auto to_window = [&](const TailSet& a) {
    PointSet out = trunc.empty_set();
    for (Value x = 1; x <= w; ++x) {
      if (a.contains(x)) out = out.with(static_cast<int>(x - 1));
    }
    return out;
  };
  std::size_t compared = 0;
  std::vector<std::optional<Value>> tails{std::nullopt};
  for (Value t = 1; t <= w; ++t) tails.emplace_back(t);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << window); ++m) {
    std::vector<Value> finite;
    for (int b = 0; b < window; ++b) {
      if ((m >> b) & 1U) finite.push_back(static_cast<Value>(b + 1));
    }
    for (const auto& tail : tails) {
      const TailSet a = TailSet::make(finite, tail);
      // Boundary-safe: the set must settle at least two points before the
      // window edge.
      const bool safe = a.tail_start() ? *a.tail_start() + 2 <= w
                                       : (a.is_empty() || a.finite_part().back() + 2 <= w);
      if (!safe) continue;
      ++compared;
      const PointSet aw = to_window(a);
      if (to_window(tail_interior(a)) != interior(trunc, aw)) {
        return fail(name, "interior of " + a.to_string());
      }
      if (to_window(tail_closure(a)) != closure(trunc, aw)) {
        return fail(name, "closure of " + a.to_string());
      }
      if (a.is_finite() && tail_classify(a).nowhere_dense != is_nowhere_dense(trunc, aw)) {
        return fail(name, "nowhere density of " + a.to_string());
      }
    }
  }
  return pass(name, "window=" + std::to_string(window) + " compared=" + std::to_string(compared));
}

}  // namespace

std::vector<CheckResult> verify_e1(int window) {
  const std::vector<TailSet> algebra = sample_algebra();
  return {
      check_singletons_nowhere_dense(),
      check_semi_open_cofinite(algebra),
      check_hsg_finite(algebra),
      check_proper_closed_finite(algebra),
      check_go_compact_fails(),
      check_truncation(window),
  };
}

std::vector<CheckResult> verify_r1_growth() {
  std::vector<CheckResult> out;
  for (int k = 1; k <= 5; ++k) {
    const std::string name = "r1-growth-k" + std::to_string(k);
    const FiniteSpace x = point_extension(k);
    const std::array factors{x, x};
    const FiniteSpace square = product(factors).space;
    const int n = x.size();
    const int p = n - 1;
    PointSet witness = square.empty_set();
    for (int i = 0; i < k; ++i) witness = witness.with(p * n + i);
    const bool nd = is_nowhere_dense(square, witness);
    const bool hsg = is_hsg_closed(square, witness);
    const int size = witness.size();
    const std::string detail = "size=" + std::to_string(size) + " points=" + std::to_string(square.size());
    if (nd && hsg && size == k) {
      out.push_back(pass(name, detail));
    } else {
      out.push_back(fail(name, detail + (nd ? "" : " not-nowhere-dense") + (hsg ? "" : " not-hsg")));
    }
  }
  return out;
}

}  // namespace topocheck
