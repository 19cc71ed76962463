#include <gtest/gtest.h>

#include <stdexcept>

#include "sfc/clustering.hpp"
#include "sfc/experiments.hpp"
#include "sfc/oracle.hpp"

using namespace sfc;

TEST(Decomposition, SingleCellAndWholeUniverse) {
  const Universe u(2, 8);
  for (CurveKind k : all_curve_kinds()) {
    if (!supports(k, u)) continue;
    const Curve curve(k, u);
    const auto one = clusters_of_query(curve, RectQuery(u, Cell(3, 5), Extent(1, 1)));
    ASSERT_EQ(one.count(), 1);
    EXPECT_EQ(one.intervals[0].lo, curve.index(Cell(3, 5)));
    const auto all = clusters_of_query(curve, RectQuery(u, Cell(0, 0), Extent(8, 8)));
    ASSERT_EQ(all.count(), 1);
    EXPECT_EQ(all.intervals[0], (RankInterval{0, 63}));
  }
}

TEST(Decomposition, SevenBySevenQuery) {
  const Universe u(2, 8);
  const RectQuery q(u, Cell(0, 1), Extent(7, 7));
  const auto onion = clusters_of_query(Curve(CurveKind::onion2d, u), q);
  ASSERT_EQ(onion.count(), 1);
  EXPECT_EQ(onion.intervals[0], (RankInterval{15, 63}));
  EXPECT_EQ(clusters_of_query(Curve(CurveKind::hilbert2d, u), q).count(), 5);
  EXPECT_EQ(clusters_of_query_boundary(Curve(CurveKind::hilbert2d, u), q), 5);
  EXPECT_EQ(clusters_of_query_boundary(Curve(CurveKind::onion2d, u), q), 1);
}

TEST(Decomposition, ZOrderSquare) {
  const Universe u(2, 4);
  const auto d = clusters_of_query(Curve(CurveKind::z2d, u), RectQuery(u, Cell(1, 1), Extent(2, 2)));
  ASSERT_EQ(d.count(), 4);
  EXPECT_EQ(d.intervals[0], (RankInterval{3, 3}));
  EXPECT_EQ(d.intervals[1], (RankInterval{6, 6}));
  EXPECT_EQ(d.intervals[2], (RankInterval{9, 9}));
  EXPECT_EQ(d.intervals[3], (RankInterval{12, 12}));
}

TEST(Decomposition, IntervalsAreSortedDisjointAndCover) {
  SplitMix64 rng(99);
  for (int dim : {2, 3}) {
    const Universe u(dim, 16);
    for (CurveKind k : all_curve_kinds()) {
      if (!supports(k, u)) continue;
      const Curve curve(k, u);
      for (const RectQuery& q : gen_random_corners(u, 40, rng.next())) {
        const auto d = clusters_of_query(curve, q);
        EXPECT_EQ(d.covered(), q.volume());
        for (std::size_t i = 1; i < d.intervals.size(); ++i) EXPECT_GT(d.intervals[i].lo, d.intervals[i - 1].hi + 1);
        EXPECT_EQ(count_clusters(curve, q), d.count()) << curve.name();
        if (curve.continuous()) {
          EXPECT_EQ(clusters_of_query_boundary(curve, q), d.count());
        }
      }
    }
  }
}

TEST(Decomposition, BoundaryPathNeedsContinuity) {
  const Universe u(2, 8);
  const RectQuery q(u, Cell(0, 0), Extent(2, 2));
  EXPECT_THROW(clusters_of_query_boundary(Curve(CurveKind::z2d, u), q), std::invalid_argument);
  EXPECT_THROW(clusters_of_query_boundary(Curve(CurveKind::rowmajor, u), q), std::invalid_argument);
}

TEST(Decomposition, RefusesHuge3dQueries) {
  const Universe u(3, 256);
  const Curve curve(CurveKind::hilbert3d, u);
  const RectQuery big(u, Cell(0, 0, 0), Extent(216, 216, 216));
  EXPECT_THROW(clusters_of_query(curve, big), std::length_error);
  // The shell path handles it.
  EXPECT_GE(count_clusters(curve, big), 1);
}

TEST(Crossings, EnteringEqualsLeavingAwayFromEndpoints) {
  const Universe u(2, 16);
  const Curve curve(CurveKind::hilbert2d, u);
  const RectQuery q(u, Cell(3, 4), Extent(5, 6));
  const auto c = crossings(curve, q);
  EXPECT_EQ(c.entering, c.leaving);
  EXPECT_EQ(c.entering, count_clusters(curve, q));
  // The first cell is inside: one cluster is never entered.
  const RectQuery corner(u, Cell(0, 0), Extent(3, 3));
  const auto cc = crossings(curve, corner);
  EXPECT_EQ(cc.entering + 1, count_clusters(curve, corner));
}

TEST(Gamma, Examples) {
  const Universe u(2, 8);
  const TranslationQuerySet qs(u, Extent(3, 3));
  EXPECT_EQ(gamma_edge(qs, {Cell(3, 3), Cell(4, 3)}), 6);
  EXPECT_EQ(gamma_unit_edge(qs, {Cell(3, 3), Cell(4, 3)}), 6);
  EXPECT_EQ(gamma_edge(qs, {Cell(0, 0), Cell(1, 0)}), 1);
  EXPECT_EQ(gamma_edge(qs, {Cell(0, 0), Cell(7, 7)}), 2);
  EXPECT_THROW(gamma_unit_edge(qs, {Cell(0, 0), Cell(2, 0)}), std::invalid_argument);
}

TEST(Gamma, ProductFormEqualsEnumeration) {
  for (int dim : {2, 3}) {
    const Coord s = dim == 2 ? 8 : 4;
    const Universe u(dim, s);
    for (Coord l = 1; l <= s; ++l) {
      Extent lengths = Extent::filled(dim, l);
      lengths[0] = std::max<Coord>(1, s - l);
      const TranslationQuerySet qs(u, lengths);
      const Curve curve(dim == 2 ? CurveKind::rowmajor : CurveKind::z3d, u);
      for (Rank r = 0; r + 1 < u.cells(); ++r) {
        const Cell a = curve.cell_at(r), b = curve.cell_at(r + 1);
        const Count brute = oracle::gamma_edge_brute(qs, {a, b});
        EXPECT_EQ(gamma_edge(qs, {a, b}), brute);
        if (grid_neighbors(a, b)) {
          EXPECT_EQ(gamma_unit_edge(qs, {a, b}), brute);
        }
      }
    }
  }
}

TEST(Average, ExactExamples) {
  const Universe u(2, 8);
  EXPECT_EQ(avg_clustering_fast(Curve(CurveKind::rowmajor, u), TranslationQuerySet(u, Extent(8, 1))), Rational(1));
  EXPECT_EQ(avg_clustering_fast(Curve(CurveKind::colmajor, u), TranslationQuerySet(u, Extent(8, 1))), Rational(8));
  const TranslationQuerySet qs(u, Extent(7, 7));
  EXPECT_EQ(avg_clustering_fast(Curve(CurveKind::onion2d, u), qs), Rational(7, 4));
  EXPECT_EQ(avg_clustering_fast(Curve(CurveKind::hilbert2d, u), qs), Rational(11, 2));
}

TEST(Average, FastEqualsNaiveEverywhere) {
  for (int dim : {2, 3}) {
    const Coord s = dim == 2 ? 8 : 4;
    const Universe u(dim, s);
    for (CurveKind k : all_curve_kinds()) {
      if (!supports(k, u)) continue;
      const Curve curve(k, u);
      for (Coord l1 = 1; l1 <= s; ++l1)
        for (Coord l2 = 1; l2 <= s; l2 += 3) {
          const Extent lengths = dim == 2 ? Extent(l1, l2) : Extent(l1, l2, s + 1 - l1);
          const TranslationQuerySet qs(u, lengths);
          ASSERT_EQ(avg_clustering_fast(curve, qs), avg_clustering_naive(curve, qs)) << curve.name();
        }
    }
  }
}

TEST(Average, WorkerCountDoesNotMatter) {
  const Universe u(2, 32);
  const Curve curve(CurveKind::z2d, u);
  const TranslationQuerySet qs(u, Extent(9, 13));
  const Rational one = avg_clustering_naive(curve, qs, 1);
  EXPECT_EQ(avg_clustering_naive(curve, qs, 4), one);
  EXPECT_EQ(avg_clustering_naive(curve, qs, 7), one);
  EXPECT_EQ(Rational(total_clusters(curve, qs, 3), qs.size()), one);
}

TEST(Average, TranslationOrderAxisZeroFastest) {
  const Universe u(2, 8);
  const TranslationQuerySet qs(u, Extent(3, 5));
  EXPECT_EQ(translation_at(qs, 0).origin(), Cell(0, 0));
  EXPECT_EQ(translation_at(qs, 1).origin(), Cell(1, 0));
  EXPECT_EQ(translation_at(qs, 6).origin(), Cell(0, 1));
  EXPECT_THROW(translation_at(qs, qs.size()), std::out_of_range);
}
