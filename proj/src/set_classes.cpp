#include "topocheck/set_classes.hpp"

namespace topocheck {
namespace detail {

struct SemiTables {
  int n = 0;
  std::vector<std::uint8_t> semi_open;
  // Indexed by subset mask.
  std::vector<std::uint64_t> sint;
  std::vector<std::uint64_t> sker;
  std::vector<std::uint64_t> semi_closed_union;
  std::vector<PointSet> semi_open_sets;
};

}  // namespace detail

namespace {

using detail::SemiTables;

std::shared_ptr<const SemiTables> build_tables(const FiniteSpace& sp) {
  auto t = std::make_shared<SemiTables>();
  const int n = sp.size();
  const std::uint64_t full = PointSet::mask(n);
  const std::size_t count = std::size_t{1} << n;
  t->n = n;
  t->semi_open.resize(count);
  t->sint.resize(count);
  t->sker.resize(count);
  t->semi_closed_union.resize(count);

  for (std::uint64_t m = 0; m < count; ++m) {
    const bool so = is_semi_open(sp, PointSet(n, m));
    t->semi_open[m] = so ? 1 : 0;
    if (so) t->semi_open_sets.emplace_back(n, m);
  }
  // Union of semi-open subsets: either A itself or the union over A - {i}.
  for (std::uint64_t m = 0; m < count; ++m) {
    if (t->semi_open[m]) {
      t->sint[m] = m;
    } else {
      std::uint64_t acc = 0;
      for (std::uint64_t r = m; r != 0; r &= r - 1) acc |= t->sint[m & ~(r & -r)];
      t->sint[m] = acc;
    }
    const bool semi_closed = t->semi_open[full & ~m] != 0;
    if (semi_closed) {
      t->semi_closed_union[m] = m;
    } else {
      std::uint64_t acc = 0;
      for (std::uint64_t r = m; r != 0; r &= r - 1) {
        acc |= t->semi_closed_union[m & ~(r & -r)];
      }
      t->semi_closed_union[m] = acc;
    }
  }
  // Intersection of semi-open supersets; the full set always qualifies.
  for (std::uint64_t m = count; m-- > 0;) {
    if (t->semi_open[m]) {
      t->sker[m] = m;
    } else {
      std::uint64_t acc = full;
      for (std::uint64_t r = full & ~m; r != 0; r &= r - 1) acc &= t->sker[m | (r & -r)];
      t->sker[m] = acc;
    }
  }
  return t;
}

const SemiTables& tables(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  require_width(sp, kExhaustiveWidth, "semi-open subset scan");
  const detail::SpaceData& d = sp.data();
  if (!d.semi_ready.load(std::memory_order_acquire)) {
    std::lock_guard lock(d.cache_mu);
    if (!d.semi_ready.load(std::memory_order_relaxed)) {
      d.semi = build_tables(sp);
      d.semi_ready.store(true, std::memory_order_release);
    }
  }
  return *d.semi;
}

}  // namespace

std::array<std::pair<std::string_view, bool>, ClassReport::kFlagCount>
ClassReport::flags() const {
  return {{
      {"open", open},
      {"closed", closed},
      {"semi_open", semi_open},
      {"semi_closed", semi_closed},
      {"preopen", preopen},
      {"regular_open", regular_open},
      {"beta_open", beta_open},
      {"dense", dense},
      {"nowhere_dense", nowhere_dense},
      {"g_open", g_open.value_or(false)},
      {"g_closed", g_closed.value_or(false)},
      {"sg_open", sg_open.value_or(false)},
      {"sg_closed", sg_closed.value_or(false)},
      {"gs_closed", gs_closed.value_or(false)},
      {"hsg_closed", hsg_closed.value_or(false)},
  }};
}

bool is_semi_open(const FiniteSpace& sp, PointSet a) {
  return a.subset_of(closure(sp, interior(sp, a)));
}

bool is_semi_closed(const FiniteSpace& sp, PointSet a) {
  return interior(sp, closure(sp, a)).subset_of(a);
}

bool is_preopen(const FiniteSpace& sp, PointSet a) {
  return a.subset_of(interior(sp, closure(sp, a)));
}

bool is_regular_open(const FiniteSpace& sp, PointSet a) {
  return a == interior(sp, closure(sp, a));
}

bool is_beta_open(const FiniteSpace& sp, PointSet a) {
  return a.subset_of(closure(sp, interior(sp, closure(sp, a))));
}

bool is_dense(const FiniteSpace& sp, PointSet a) {
  return closure(sp, a).is_full();
}

bool is_nowhere_dense(const FiniteSpace& sp, PointSet a) {
  return interior(sp, closure(sp, a)).is_empty();
}

bool is_g_open(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  // Closed sets are down-sets of the specialization order, so the union of
  // the closed subsets of A is the set of points whose closure stays in A.
  PointSet largest_closed = sp.empty_set();
  a.for_each([&](int p) {
    if (closure(sp, PointSet::singleton(sp.size(), p)).subset_of(a)) {
      largest_closed = largest_closed.with(p);
    }
  });
  return largest_closed.subset_of(interior(sp, a));
}

bool is_g_closed(const FiniteSpace& sp, PointSet a) {
  return closure(sp, a).subset_of(kernel(sp, a));
}

PointSet nd_singletons(const FiniteSpace& sp) {
  PointSet out = sp.empty_set();
  for (int p = 0; p < sp.size(); ++p) {
    if (is_nowhere_dense(sp, PointSet::singleton(sp.size(), p))) out = out.with(p);
  }
  return out;
}

bool is_hsg_closed(const FiniteSpace& sp, PointSet a) {
  return !nd_singletons(sp).intersects(interior(sp, closure(sp, a)));
}

PointSet semi_interior(const FiniteSpace& sp, PointSet a) {
  return PointSet(sp.size(), tables(sp, a).sint[a.bits()]);
}

PointSet semi_closure(const FiniteSpace& sp, PointSet a) {
  const SemiTables& t = tables(sp, a);
  return PointSet(sp.size(), t.sint[a.complement().bits()]).complement();
}

PointSet semi_kernel(const FiniteSpace& sp, PointSet a) {
  return PointSet(sp.size(), tables(sp, a).sker[a.bits()]);
}

bool is_sg_open(const FiniteSpace& sp, PointSet a) {
  const SemiTables& t = tables(sp, a);
  return (t.semi_closed_union[a.bits()] & ~t.sint[a.bits()]) == 0;
}

bool is_sg_closed(const FiniteSpace& sp, PointSet a) {
  return semi_closure(sp, a).subset_of(semi_kernel(sp, a));
}

bool is_gs_closed(const FiniteSpace& sp, PointSet a) {
  return semi_closure(sp, a).subset_of(kernel(sp, a));
}

bool is_hsg_closed_by_definition(const FiniteSpace& sp, PointSet a) {
  tables(sp, a);
  const std::uint64_t bits = a.bits();
  // Walk every submask of A, including the empty set.
  for (std::uint64_t s = bits;; s = (s - 1) & bits) {
    if (!is_sg_closed(sp, PointSet(sp.size(), s))) return false;
    if (s == 0) break;
  }
  return true;
}

const std::vector<PointSet>& semi_open_sets(const FiniteSpace& sp) {
  return tables(sp, sp.empty_set()).semi_open_sets;
}

ClassReport classify_basic(const FiniteSpace& sp, PointSet a) {
  require_member(sp, a);
  ClassReport r;
  r.open = sp.is_open(a);
  r.closed = sp.is_closed(a);
  r.semi_open = is_semi_open(sp, a);
  r.semi_closed = is_semi_closed(sp, a);
  r.preopen = is_preopen(sp, a);
  r.regular_open = is_regular_open(sp, a);
  r.beta_open = is_beta_open(sp, a);
  r.dense = is_dense(sp, a);
  r.nowhere_dense = is_nowhere_dense(sp, a);
  return r;
}

ClassReport classify(const FiniteSpace& sp, PointSet a) {
  ClassReport r = classify_basic(sp, a);
  r.g_open = is_g_open(sp, a);
  r.g_closed = is_g_closed(sp, a);
  r.sg_open = is_sg_open(sp, a);
  r.sg_closed = is_sg_closed(sp, a);
  r.gs_closed = is_gs_closed(sp, a);
  r.hsg_closed = is_hsg_closed(sp, a);
  return r;
}

}  // namespace topocheck
