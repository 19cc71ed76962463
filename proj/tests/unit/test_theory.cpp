#include <gtest/gtest.h>

#include <stdexcept>

#include "sfc/clustering.hpp"
#include "sfc/oracle.hpp"
#include "sfc/theory.hpp"

using namespace sfc;

namespace {

// Sum of gamma over every onion2d edge, straight from the curve.
Count onion_gamma_total(const TranslationQuerySet& qs) {
  const Curve curve(CurveKind::onion2d, qs.universe());
  Count total = 0;
  for (Rank r = 0; r + 1 < qs.universe().cells(); ++r)
    total += gamma_edge(qs, {curve.cell_at(r), curve.cell_at(r + 1)});
  return total;
}

}  // namespace

TEST(OnionMean2d, Examples) {
  const auto a = thm1_onion2d(2, 2, 8);
  EXPECT_EQ(a.value, Rational(286, 147));
  EXPECT_EQ(a.slack, Rational(5));
  EXPECT_EQ(a.label, "l2<=m");
  const auto b = thm1_onion2d(8, 8, 8);
  EXPECT_EQ(b.value, Rational(2, 3));
  EXPECT_EQ(b.slack, Rational(2));
  EXPECT_LE(abs(Rational(1) - b.value), b.slack);
  const auto c = thm1_onion2d(6, 6, 8);
  EXPECT_EQ(c.value, Rational(2));
  const Universe u(2, 8);
  const Rational measured = oracle::avg_clustering_oracle(Curve(CurveKind::onion2d, u), TranslationQuerySet(u, Extent(6, 6)));
  EXPECT_GE(measured, Rational(0));
  EXPECT_LE(measured, Rational(4));
}

TEST(OnionMean2d, SwapsAndLabelsMixedCase) {
  EXPECT_TRUE(thm1_onion2d(3, 2, 8).swapped);
  EXPECT_EQ(thm1_onion2d(3, 2, 8).value, thm1_onion2d(2, 3, 8).value);
  const auto mixed = thm1_onion2d(2, 6, 8);
  EXPECT_EQ(mixed.label, "mixed");
  EXPECT_EQ(mixed.kind, FormulaKind::leading_order);
}

TEST(OnionMean2d, WithinSlackOfMeasurement) {
  for (Coord s : {8, 16}) {
    const Universe u(2, s);
    const Curve onion(CurveKind::onion2d, u);
    for (Coord l1 = 1; l1 <= s; ++l1)
      for (Coord l2 = l1; l2 <= s; ++l2) {
        const auto f = thm1_onion2d(l1, l2, s);
        if (f.kind != FormulaKind::exact_with_eps) continue;
        const Rational measured = avg_clustering_fast(onion, TranslationQuerySet(u, Extent(l1, l2)));
        EXPECT_LE(abs(measured - f.value), f.slack) << s << " " << l1 << "x" << l2;
      }
  }
}

TEST(EdgeSums, PartitionAllOnionEdges) {
  const Universe u(2, 8);
  const TranslationQuerySet qs(u, Extent(3, 3));
  const EdgeSums e = onion_edge_sums(3, 3, 8);
  EXPECT_EQ(e.s1 + e.s2 + e.s3, onion_gamma_total(qs));
}

TEST(EdgeSums, ThirdSumIsSmall) {
  for (Coord s : {8, 12, 16}) {
    const Coord m = s / 2;
    for (Coord l1 = 1; l1 <= s; ++l1)
      for (Coord l2 = l1; l2 <= s; ++l2) {
        if (l1 <= m && l2 > m) continue;
        const EdgeSums e = onion_edge_sums(l1, l2, s);
        const TranslationQuerySet qs(Universe(2, s), Extent(l1, l2));
        EXPECT_EQ(e.s1 + e.s2 + e.s3, onion_gamma_total(qs));
        const Rational share = abs(Rational(e.s3, 2 * qs.size()));
        EXPECT_LE(share, l2 <= m ? Rational(1) : Rational(1, 2)) << s << " " << l1 << "x" << l2;
      }
  }
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_cell(3, 3, Cell(0, 0), 8), 1);
  EXPECT_EQ(lambda_cell(3, 3, Cell(3, 3), 8), 6);
  EXPECT_EQ(lambda_cell(6, 6, Cell(3, 3), 8), 0);
  EXPECT_THROW(lambda_cell(2, 6, Cell(0, 0), 8), std::domain_error);
}

TEST(Lambda, ClosedFormEqualsNeighbourMinimum) {
  for (Coord s : {8, 12}) {
    const Universe u(2, s);
    const Coord m = s / 2;
    for (Coord l1 = 1; l1 <= s; ++l1)
      for (Coord l2 = l1; l2 <= s; ++l2) {
        if (l1 <= m && l2 > m) continue;
        const TranslationQuerySet qs(u, Extent(l1, l2));
        for (Coord x = 0; x < s; ++x)
          for (Coord y = 0; y < s; ++y) {
            const Count brute = oracle::lambda_brute(qs, Cell(x, y));
            ASSERT_EQ(lambda_cell(l1, l2, Cell(x, y), s), brute) << s << " " << l1 << "x" << l2 << " @" << x << "," << y;
            ASSERT_EQ(lambda_exact(qs, Cell(x, y)), brute);
          }
      }
  }
}

TEST(Lambda, PublishedFormDiffersOnlyWhereCorrected) {
  Count published = 0, corrected = 0;
  for (Coord x = 0; x < 8; ++x)
    for (Coord y = 0; y < 8; ++y) {
      published += lambda_cell_published(6, 6, Cell(x, y), 8);
      corrected += lambda_cell(6, 6, Cell(x, y), 8);
      EXPECT_EQ(lambda_cell_published(3, 3, Cell(x, y), 8), lambda_cell(3, 3, Cell(x, y), 8));
    }
  EXPECT_EQ(published, 56);
  EXPECT_EQ(corrected, 20);
}

TEST(Omega, BetweenHalfLambdaAndLambda) {
  const Universe u(2, 8);
  for (const Extent& e : {Extent(3, 3), Extent(2, 5), Extent(6, 6)}) {
    const TranslationQuerySet qs(u, e);
    for (Coord x = 0; x < 8; ++x)
      for (Coord y = 0; y < 8; ++y) {
        const Count w = omega_cell(qs, Cell(x, y)), l = lambda_exact(qs, Cell(x, y));
        EXPECT_LE(w, l);
        EXPECT_GE(2 * w, l);
        EXPECT_EQ(w, oracle::omega_brute(qs, Cell(x, y)));
      }
  }
}

TEST(Omega, RowsAndColumnsAtLeastTwo) {
  const Universe u(2, 8);
  const std::vector<TranslationQuerySet> family{TranslationQuerySet(u, Extent(8, 1)), TranslationQuerySet(u, Extent(1, 8))};
  for (Coord x = 0; x < 8; ++x)
    for (Coord y = 0; y < 8; ++y) EXPECT_GE(omega_cell(family, Cell(x, y)), 2);
}

TEST(TSum, Examples) {
  const Universe u(2, 8);
  const TranslationQuerySet qs(u, Extent(6, 6));
  EXPECT_EQ(t_sum_exact(qs), 20);
  EXPECT_EQ(oracle::t_sum_brute(qs), 20);
  EXPECT_EQ(t_sum(6, 6, 8), Rational(20));
  EXPECT_EQ(t_sum_published(6, 6, 8), Rational(56));
  // l1 = l2 = l > m: 2/3 (1 + 2L) L (1 + L)
  for (Coord l : {5, 6, 7, 8}) {
    const Coord L = 8 - l + 1;
    EXPECT_EQ(t_sum_published(l, l, 8), Rational(2 * (1 + 2 * L) * L * (1 + L), 3));
  }
}

TEST(TSum, ClosedFormAgainstSummation) {
  for (Coord s : {8, 12, 16}) {
    const Coord m = s / 2;
    for (Coord l1 = 1; l1 <= s; ++l1)
      for (Coord l2 = l1; l2 <= s; ++l2) {
        if (l1 <= m && l2 > m) continue;
        const Count exact = t_sum_exact(TranslationQuerySet(Universe(2, s), Extent(l1, l2)));
        const Rational diff = abs(t_sum(l1, l2, s) - Rational(exact));
        if (l1 > m)
          EXPECT_EQ(diff, Rational(0)) << s << " " << l1 << "x" << l2;
        else
          EXPECT_LE(diff, Rational(4 * s)) << s << " " << l1 << "x" << l2;
      }
  }
}

TEST(LowerBound2d, Examples) {
  const auto c = lb2d_continuous(6, 6, 8);
  EXPECT_EQ(c.value, Rational(10, 9));
  EXPECT_EQ(c.slack, Rational(1));
  EXPECT_EQ(lb2d_general(6, 6, 8).value, Rational(5, 9));
  // The whole universe: one query, clustering 1.
  EXPECT_LE(lb2d_continuous(8, 8, 8).value, Rational(1) + lb2d_continuous(8, 8, 8).slack);
}

TEST(LowerBound2d, RowMajorRespectsGeneralBound) {
  const Universe u(2, 8);
  const TranslationQuerySet qs(u, Extent(2, 2));
  const auto lb = lb2d_general(2, 2, 8);
  EXPECT_GE(avg_clustering_fast(Curve(CurveKind::rowmajor, u), qs), lb.value - lb.slack);
  EXPECT_GE(avg_clustering_fast(Curve(CurveKind::hilbert2d, u), qs), lb2d_continuous(2, 2, 8).value - 1);
}

TEST(LowerBoundExact, HalvesForGeneralCurves) {
  const TranslationQuerySet qs(Universe(2, 8), Extent(3, 5));
  const auto c = lb_exact_continuous(qs), g = lb_exact_general(qs);
  EXPECT_EQ(g.value * Rational(2), c.value);
  EXPECT_EQ(c.label, "lambda-sum");
  EXPECT_EQ(c.value, Rational(t_sum_exact(qs), 2 * qs.size()));
}

TEST(OnionMean3d, Examples) {
  const auto one = thm4_onion3d(1, 8);
  EXPECT_EQ(one.kind, FormulaKind::leading_order);
  EXPECT_NEAR(one.value.to_double(), 1.0, 1e-3);
  const auto whole = thm4_onion3d(8, 8);
  EXPECT_EQ(whole.kind, FormulaKind::upper_bound);
  EXPECT_EQ(whole.value, Rational(3, 5) + Rational(13, 4) - Rational(13, 6));
  EXPECT_GE(whole.value, Rational(1));
  const Universe u(3, 8);
  const Rational measured = avg_clustering_naive(Curve(CurveKind::onion3d, u), TranslationQuerySet(u, Extent(6, 6, 6)));
  EXPECT_LE(measured, thm4_onion3d(6, 8).value);
}

TEST(LowerBound3d, Examples) {
  EXPECT_LT(lb3d_continuous(8, 8).value, Rational(0));
  const auto lb = lb3d_continuous(6, 8);
  EXPECT_EQ(lb.value, Rational(9, 10));
  EXPECT_EQ(lb.slack, Rational(1));
  const Universe u(3, 8);
  const TranslationQuerySet qs(u, Extent(6, 6, 6));
  for (CurveKind k : {CurveKind::onion3d, CurveKind::hilbert3d})
    EXPECT_GE(avg_clustering_fast(Curve(k, u), qs), lb.value - lb.slack);
  const auto g = lb3d_general(6, 8);
  EXPECT_EQ(g.value, Rational(9, 20));
  EXPECT_EQ(g.slack, Rational(2));
  EXPECT_EQ(lb3d_general(3, 8).kind, FormulaKind::leading_order);
}

TEST(NearCube, PublishedMaxima) {
  const auto two = near_cube_case({1.0, {0.355, 0.355}, {0.0, 0.0}}, 2, 256);
  EXPECT_EQ(two.name, "III");
  ASSERT_TRUE(two.bound.has_value());
  EXPECT_NEAR(*two.bound, 2.32, 0.005);
  EXPECT_EQ(two.lengths, Extent(91, 91));
  const auto three = near_cube_case({1.0, {0.3967, 0.3967, 0.3967}, {}}, 3, 64);
  EXPECT_EQ(three.name, "III");
  EXPECT_NEAR(*three.bound, 3.4, 0.02);
}

TEST(NearCube, OtherCases) {
  const auto one = near_cube_case({0.0, {5, 5}, {0, 0}}, 2, 256);
  EXPECT_EQ(one.case_id, 1);
  EXPECT_EQ(*one.bound, 1.0);
  const auto two = near_cube_case({0.5, {2, 1}, {}}, 2, 256);
  EXPECT_EQ(two.case_id, 2);
  EXPECT_DOUBLE_EQ(*two.bound, 3.0);
  EXPECT_EQ(two.phi, (std::vector<double>{1, 2}));
  const auto four = near_cube_case({1.0, {0.6, 0.8}, {}}, 2, 256);
  EXPECT_EQ(four.case_id, 4);
  EXPECT_NEAR(*four.bound, 5.0, 1e-9);
  const auto five = near_cube_case({1.0, {1, 1}, {-10, -4}}, 2, 256);
  EXPECT_EQ(five.case_id, 5);
  EXPECT_NEAR(*five.bound, 2 + 3 * 1.2 * 1.2, 1e-9);
}

TEST(NearCube, Rejections) {
  EXPECT_THROW(near_cube_case({0.5, {0, 1}, {}}, 2, 256), std::invalid_argument);
  EXPECT_THROW(near_cube_case({1.0, {0.3, 0.7}, {}}, 2, 256), std::invalid_argument);
  EXPECT_THROW(near_cube_case({1.0, {0.3, 0.4, 0.3}, {}}, 3, 64), std::invalid_argument);
  EXPECT_THROW(near_cube_case({1.0, {0.3}, {}}, 2, 64), std::invalid_argument);
}

TEST(ApproxRatio, Examples) {
  const Universe u(2, 256);
  EXPECT_LE(approx_ratio(Curve(CurveKind::onion2d, u), TranslationQuerySet(u, Extent(91, 91))).to_double(), 2.42);
  EXPECT_GE(approx_ratio(Curve(CurveKind::hilbert2d, u), TranslationQuerySet(u, Extent(252, 252))).to_double(), 10.0);
  const Universe small(2, 8);
  EXPECT_THROW(approx_ratio(Curve(CurveKind::onion2d, small), TranslationQuerySet(small, Extent(8, 8))), std::domain_error);
}

TEST(HalfSlabs, NoCurveIsGoodOnBoth) {
  for (Coord s : {8, 16}) {
    const Universe u(2, s);
    const TranslationQuerySet tall(u, Extent(s / 2, s)), wide(u, Extent(s, s / 2));
    for (CurveKind k : all_curve_kinds()) {
      if (!supports(k, u)) continue;
      const Curve curve(k, u);
      const Rational a = avg_clustering_fast(curve, tall), b = avg_clustering_fast(curve, wide);
      EXPECT_FALSE(a < Rational(s, 8) && b < Rational(s, 8)) << curve.name();
      if (k == CurveKind::colmajor) {
        EXPECT_EQ(a, Rational(1));
        EXPECT_GE(b, Rational(s, 2));
      }
    }
  }
}
