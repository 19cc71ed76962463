#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "sfc/experiments.hpp"

using namespace sfc;

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(SplitMix64, UniformStaysInRange) {
  SplitMix64 rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.uniform(6);
    ASSERT_LE(v, 6U);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(rng.uniform(0), 0U);
}

TEST(RandomCubes, FullSideHasOneOrigin) {
  const Universe u(2, 16);
  for (const auto& q : gen_random_cubes(u, 16, 10, 1)) EXPECT_EQ(q.origin(), Cell(0, 0));
  EXPECT_THROW(gen_random_cubes(u, 17, 1, 1), std::invalid_argument);
}

TEST(RandomCubes, SeededAndInBounds) {
  const Universe u(3, 32);
  const auto a = gen_random_cubes(u, 10, 200, 77), b = gen_random_cubes(u, 10, 200, 77);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, gen_random_cubes(u, 10, 200, 78));
  Coord max_origin = 0;
  for (const auto& q : a)
    for (int i = 0; i < 3; ++i) {
      EXPECT_LE(q.origin()[i], 22);
      max_origin = std::max(max_origin, q.origin()[i]);
    }
  EXPECT_EQ(max_origin, 22);
}

TEST(RandomCubes, DefaultSizes) {
  EXPECT_EQ(default_cube_sizes(2, 1024), (std::vector<Coord>{974, 874, 774, 674, 574, 474, 374, 274, 174, 74}));
  EXPECT_EQ(default_cube_sizes(3, 512), (std::vector<Coord>{472, 432, 192, 152, 112, 72, 32}));
  EXPECT_EQ(default_cube_sizes(2, 256), (std::vector<Coord>{244, 220, 196, 172, 148, 124, 100, 76, 52, 28}));
  EXPECT_EQ(default_cube_sizes(3, 64), (std::vector<Coord>{59, 54, 24, 19, 14, 9, 4}));
}

TEST(FixedRatio, SquaresAndSteps) {
  const Universe u(2, 8);
  const auto qs = gen_fixed_ratio(u, {1, 1}, 4, 20, 9);
  ASSERT_EQ(qs.size(), 40U);
  for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(qs[i].lengths(), i < 20 ? Extent(8, 8) : Extent(4, 4));
}

TEST(FixedRatio, ExtremeRatioKeepsOnlyThinRows) {
  const Universe u(2, 1024);
  EXPECT_TRUE(gen_fixed_ratio(u, {1, 1024}, 50, 20, 1).empty());
  const auto qs = gen_fixed_ratio(u, {1, 1024}, 1, 5, 1);
  ASSERT_EQ(qs.size(), 5U);
  for (const auto& q : qs) EXPECT_EQ(q.lengths(), Extent(1024, 1));
}

TEST(FixedRatio, ThreeQuarters) {
  const Universe u(3, 16);
  for (const auto& q : gen_fixed_ratio(u, {3, 4}, 3, 2, 4)) {
    EXPECT_EQ(q.lengths()[0], q.lengths()[1] * 4 / 3);
    EXPECT_EQ(q.lengths()[2], q.lengths()[1]);
  }
  EXPECT_THROW(gen_fixed_ratio(u, {0, 1}, 1, 1, 1), std::invalid_argument);
  EXPECT_EQ(published_ratios().size(), 11U);
  EXPECT_EQ(published_ratios().front().str(), "1/1024");
  EXPECT_EQ(published_ratios()[5].str(), "1");
}

TEST(RandomCorners, MeanSideIsAboutAThird) {
  const Coord s = 256;
  const Universe u(2, s);
  const auto qs = gen_random_corners(u, 100000, 11);
  double sum = 0;
  for (const auto& q : qs) {
    EXPECT_GE(q.lengths()[0], 1);
    sum += static_cast<double>(q.lengths()[0]);
  }
  const double mean = sum / static_cast<double>(qs.size());
  const double exact = (static_cast<double>(s) * s - 1) / (3.0 * s) + 1;
  EXPECT_NEAR(mean / exact, 1.0, 0.02);
  EXPECT_NEAR(mean / (s / 3.0), 1.0, 0.02);
}

TEST(BoxStats, Quantiles) {
  const auto one = box_stats({5});
  EXPECT_EQ(one.min, 5);
  EXPECT_EQ(one.median, 5);
  EXPECT_EQ(one.max, 5);
  EXPECT_EQ(one.count, 1);
  const auto four = box_stats({4, 1, 3, 2});
  EXPECT_EQ(four.median, 2.5);
  EXPECT_EQ(four.mean, 2.5);
  // h = 0.75 rounds to index 1, h = 2.25 to index 2.
  EXPECT_EQ(four.q1, 2);
  EXPECT_EQ(four.q3, 3);
  const auto five = box_stats({1, 2, 3, 4, 5});
  EXPECT_EQ(five.q1, 2);
  EXPECT_EQ(five.q3, 4);
  EXPECT_THROW(box_stats({}), std::invalid_argument);
}

TEST(BoxStats, Ordered) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(1 + rng.uniform(40));
    for (double& x : v) x = static_cast<double>(rng.uniform(1000));
    const auto b = box_stats(v);
    EXPECT_LE(b.min, b.q1);
    EXPECT_LE(b.q1, b.median);
    EXPECT_LE(b.median, b.q3);
    EXPECT_LE(b.q3, b.max);
    EXPECT_EQ(b.count, static_cast<Count>(v.size()));
  }
}

TEST(Experiment, Names) {
  EXPECT_EQ(parse_experiment("random-cubes"), Experiment::random_cubes);
  EXPECT_EQ(parse_experiment("fixed-ratio"), Experiment::fixed_ratio);
  EXPECT_EQ(to_string(Experiment::random_corners), "random-corners");
  EXPECT_FALSE(parse_experiment("cubes").has_value());
}

TEST(RunBenchmark, DeskScaleCubes) {
  BenchConfig c;
  c.side = 256;
  c.curves = {CurveKind::onion2d, CurveKind::hilbert2d};
  c.count = 1000;
  c.seed = 2024;
  c.workers = 1;
  const BenchResult serial = run_benchmark(c);
  EXPECT_EQ(serial.rows.size(), 20000U);
  EXPECT_EQ(serial.stats.size(), 20U);
  c.workers = 8;
  const BenchResult parallel = run_benchmark(c);
  ASSERT_EQ(parallel.rows.size(), serial.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    ASSERT_EQ(parallel.rows[i].query, serial.rows[i].query);
    ASSERT_EQ(parallel.rows[i].clusters, serial.rows[i].clusters);
  }
  // l = 206 is not in the default schedule; check it directly.
  c.sizes = {206};
  const BenchResult big = run_benchmark(c);
  ASSERT_EQ(big.stats.size(), 2U);
  EXPECT_LT(big.stats[0].stats.median, big.stats[1].stats.median);
}

TEST(RunBenchmark, EmptyCurveListAndCorners) {
  BenchConfig c;
  c.side = 32;
  EXPECT_TRUE(run_benchmark(c).rows.empty());
  c.experiment = Experiment::random_corners;
  c.dim = 3;
  c.side = 16;
  c.count = 50;
  c.curves = {CurveKind::onion3d, CurveKind::z3d};
  const BenchResult r = run_benchmark(c);
  EXPECT_EQ(r.rows.size(), 100U);
  ASSERT_EQ(r.stats.size(), 2U);
  EXPECT_FALSE(r.stats[0].lengths.has_value());
  c.curves = {CurveKind::onion2d};
  EXPECT_THROW(run_benchmark(c), std::invalid_argument);
}
