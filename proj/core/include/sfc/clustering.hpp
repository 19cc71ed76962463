#pragma once

// Clustering numbers: per-query rank-interval decomposition, cluster counting
// and crossing-edge averages over translation query sets.

#include <vector>

#include "sfc/core.hpp"
#include "sfc/curves.hpp"
#include "sfc/rational.hpp"

namespace sfc {

// Inclusive rank range.
struct RankInterval {
  Rank lo = 0;
  Rank hi = 0;

  Count size() const { return hi - lo + 1; }
  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

struct IntervalDecomposition {
  RectQuery query;
  std::vector<RankInterval> intervals;  // sorted, disjoint, non-adjacent

  Count count() const { return static_cast<Count>(intervals.size()); }
  Count covered() const;
};

struct CrossingCounts {
  Count entering = 0;
  Count leaving = 0;
};

// 3D queries above this volume are refused by the per-query sorting path.
inline constexpr Count kNaiveVolumeLimit3d = 10'000'000;

// Sorts the ranks of all cells of q and splits at gaps.
IntervalDecomposition clusters_of_query(const Curve& curve, const RectQuery& q);

// Counts cluster starts by inspecting only the boundary shell of q.
// Throws std::invalid_argument for curves without the continuity flag.
Count clusters_of_query_boundary(const Curve& curve, const RectQuery& q);

// Cluster count by the cheapest exact method available for the curve: the
// shell scan plus a check of every rank where the curve jumps, when those
// jumps are few, and sorting otherwise.
Count count_clusters(const Curve& curve, const RectQuery& q);

// Curve edges entering and leaving q.
CrossingCounts crossings(const Curve& curve, const RectQuery& q);

// Number of queries in qs crossed by the edge: C(a) + C(b) - 2 P(a, b).
Count gamma_edge(const TranslationQuerySet& qs, const DirectedEdge& e);

// Product form for unit edges: delta_1 along the edge axis times the clipped
// placement counts of the other axes. Throws when e is not a unit edge.
Count gamma_unit_edge(const TranslationQuerySet& qs, const DirectedEdge& e);

// Mean clustering number over qs from edge crossings (exact).
Rational avg_clustering_fast(const Curve& curve, const TranslationQuerySet& qs);

// Mean clustering number by decomposing every translation. Work is split
// across `workers` threads; the result does not depend on the split.
Rational avg_clustering_naive(const Curve& curve, const TranslationQuerySet& qs, unsigned workers = 1);

// Sum of count_clusters over every translation, parallel over `workers`.
Count total_clusters(const Curve& curve, const TranslationQuerySet& qs, unsigned workers = 1);

// Translation number `index` of qs, axis 0 varying fastest. Throws
// std::out_of_range outside [0, |Q|).
RectQuery translation_at(const TranslationQuerySet& qs, Count index);

}  // namespace sfc
