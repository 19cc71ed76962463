#include "sfc/clustering.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace sfc {

namespace {

// Calls fn on every cell of q that lies on its boundary shell, i.e. cells
// with some coordinate equal to the first or last in its axis range.
void for_each_shell_cell(const RectQuery& q, const std::function<void(const Cell&)>& fn) {
  const int d = q.dim();
  const Cell& o = q.origin();
  const Extent& l = q.lengths();
  Cell c = o;
  // Iterate rows along axis 0; rows off the shell in axes >= 1 contribute
  // only their two end cells.
  while (true) {
    bool row_on_shell = false;
    for (int a = 1; a < d; ++a)
      if (c[a] == o[a] || c[a] == o[a] + l[a] - 1) row_on_shell = true;
    if (row_on_shell || l[0] <= 2) {
      for (Coord x = o[0]; x < o[0] + l[0]; ++x) {
        c[0] = x;
        fn(c);
      }
    } else {
      c[0] = o[0];
      fn(c);
      c[0] = o[0] + l[0] - 1;
      fn(c);
    }
    c[0] = o[0];
    int a = 1;
    while (a < d) {
      if (++c[a] < o[a] + l[a]) break;
      c[a] = o[a];
      ++a;
    }
    if (a == d) return;
  }
}

bool starts_cluster(const Curve& curve, const RectQuery& q, Rank r) {
  return r == 0 || !q.contains(curve.cell_at(r - 1));
}

Count shell_scan(const Curve& curve, const RectQuery& q, const std::vector<Rank>& breaks) {
  Count count = 0;
  for_each_shell_cell(q, [&](const Cell& c) {
    if (starts_cluster(curve, q, curve.index(c))) ++count;
  });
  for (Rank r : breaks) {
    const Cell c = curve.cell_at(r);
    if (q.contains(c) && !q.on_shell(c) && starts_cluster(curve, q, r)) ++count;
  }
  return count;
}

Count parallel_sum(Count n, unsigned workers, const std::function<Count(Count)>& term) {
  workers = std::max(1U, workers);
  if (workers == 1 || n < 2) {
    Count total = 0;
    for (Count i = 0; i < n; ++i) total += term(i);
    return total;
  }
  const Count chunks = std::min<Count>(n, workers);
  std::vector<Count> partial(static_cast<std::size_t>(chunks), 0);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
  for (Count w = 0; w < chunks; ++w) {
    threads.emplace_back([&, w] {
      try {
        Count sum = 0;
        for (Count i = w; i < n; i += chunks) sum += term(i);
        partial[static_cast<std::size_t>(w)] = sum;
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Count total = 0;
  for (Count p : partial) total += p;
  return total;
}

Coord axis_range_nabla(Coord x, Coord side) { return std::min(x + 1, side - x); }

}  // namespace

Count IntervalDecomposition::covered() const {
  Count total = 0;
  for (const auto& iv : intervals) total += iv.size();
  return total;
}

IntervalDecomposition clusters_of_query(const Curve& curve, const RectQuery& q) {
  if (q.dim() != curve.universe().dim()) throw std::invalid_argument("query dimension does not match the curve");
  if (q.dim() == 3 && q.volume() > kNaiveVolumeLimit3d)
    throw std::length_error("3D query volume exceeds 10^7 cells; use the boundary path");
  std::vector<Rank> ranks;
  ranks.reserve(static_cast<std::size_t>(q.volume()));
  const Cell& o = q.origin();
  const Extent& l = q.lengths();
  const int d = q.dim();
  Cell c = o;
  while (true) {
    ranks.push_back(curve.index(c));
    int a = 0;
    while (a < d) {
      if (++c[a] < o[a] + l[a]) break;
      c[a] = o[a];
      ++a;
    }
    if (a == d) break;
  }
  std::sort(ranks.begin(), ranks.end());
  IntervalDecomposition out{q, {}};
  for (Rank r : ranks) {
    if (!out.intervals.empty() && out.intervals.back().hi + 1 == r)
      out.intervals.back().hi = r;
    else
      out.intervals.push_back({r, r});
  }
  return out;
}

Count clusters_of_query_boundary(const Curve& curve, const RectQuery& q) {
  if (!curve.continuous())
    throw std::invalid_argument(std::string(curve.name()) + " is not continuous; the boundary path does not apply");
  return shell_scan(curve, q, {});
}

Count count_clusters(const Curve& curve, const RectQuery& q) {
  if (q.dim() != curve.universe().dim()) throw std::invalid_argument("query dimension does not match the curve");
  const auto& breaks = curve.sparse_breaks();
  if (breaks) return shell_scan(curve, q, *breaks);
  return clusters_of_query(curve, q).count();
}

CrossingCounts crossings(const Curve& curve, const RectQuery& q) {
  const Count n = curve.universe().cells();
  CrossingCounts out;
  const IntervalDecomposition dec = clusters_of_query(curve, q);
  for (const auto& iv : dec.intervals) {
    if (iv.lo > 0) ++out.entering;
    if (iv.hi < n - 1) ++out.leaving;
  }
  return out;
}

Count gamma_edge(const TranslationQuerySet& qs, const DirectedEdge& e) {
  return containment_count(qs, e.from) + containment_count(qs, e.to) - 2 * pair_containment_count(qs, e.from, e.to);
}

Count gamma_unit_edge(const TranslationQuerySet& qs, const DirectedEdge& e) {
  const Universe& u = qs.universe();
  u.check(e.from);
  u.check(e.to);
  if (!grid_neighbors(e.from, e.to)) throw std::invalid_argument("edge is not between grid neighbours");
  const Coord s = u.side();
  const Coord m = u.half();
  int axis = 0;
  while (e.from[axis] == e.to[axis]) ++axis;

  const Coord la = qs.lengths()[axis];
  const Coord na = nabla_edge(e, u, axis);
  Count delta1;
  if (la <= m)
    delta1 = na >= la ? 2 : 1;
  else
    delta1 = na <= s - la ? 1 : 0;

  Count delta2 = 1;
  for (int b = 0; b < u.dim(); ++b) {
    if (b == axis) continue;
    const Coord lb = qs.lengths()[b];
    delta2 *= std::min({lb, s + 1 - lb, axis_range_nabla(e.from[b], s)});
  }
  return delta1 * delta2;
}

Rational avg_clustering_fast(const Curve& curve, const TranslationQuerySet& qs) {
  if (!(curve.universe() == qs.universe())) throw std::invalid_argument("query set and curve use different universes");
  const Count n = curve.universe().cells();
  Count total = 0;
  Cell prev = curve.cell_at(0);
  const Cell first = prev;
  for (Rank r = 1; r < n; ++r) {
    const Cell next = curve.cell_at(r);
    total += gamma_edge(qs, {prev, next});
    prev = next;
  }
  total += containment_count(qs, first) + containment_count(qs, prev);
  return Rational(total, 2 * qs.size());
}

RectQuery translation_at(const TranslationQuerySet& qs, Count index) {
  if (index < 0 || index >= qs.size())
    throw std::out_of_range("translation " + std::to_string(index) + " outside [0, " + std::to_string(qs.size()) + ")");
  Cell origin = Cell::filled(qs.dim(), 0);
  for (int a = 0; a < qs.dim(); ++a) {
    origin[a] = index % qs.placements(a);
    index /= qs.placements(a);
  }
  return RectQuery(qs.universe(), origin, qs.lengths());
}

Rational avg_clustering_naive(const Curve& curve, const TranslationQuerySet& qs, unsigned workers) {
  if (!(curve.universe() == qs.universe())) throw std::invalid_argument("query set and curve use different universes");
  const Count total = parallel_sum(qs.size(), workers,
                                   [&](Count i) { return clusters_of_query(curve, translation_at(qs, i)).count(); });
  return Rational(total, qs.size());
}

Count total_clusters(const Curve& curve, const TranslationQuerySet& qs, unsigned workers) {
  if (!(curve.universe() == qs.universe())) throw std::invalid_argument("query set and curve use different universes");
  return parallel_sum(qs.size(), workers, [&](Count i) { return count_clusters(curve, translation_at(qs, i)); });
}

}  // namespace sfc
