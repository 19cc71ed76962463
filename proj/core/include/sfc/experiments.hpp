#pragma once

// Seeded query generators, box-plot statistics and the benchmark runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfc/core.hpp"
#include "sfc/curves.hpp"

namespace sfc {

// splitmix64; the same seed gives the same stream everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform on [0, bound] by rejection.
  std::uint64_t uniform(std::uint64_t bound);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Side ratio l2 / l1 as an exact fraction.
struct Ratio {
  Count num = 1;
  Count den = 1;

  std::string str() const;
};

// Ratios used in the published fixed-ratio experiment.
const std::vector<Ratio>& published_ratios();

// `count` cubes of side l, origins uniform over feasible positions.
std::vector<RectQuery> gen_random_cubes(const Universe& u, Coord l, Count count, std::uint64_t seed);

// l2 runs from s down to 1 in steps of `step`; l1 = floor(l2 / rho); sizes
// with l1 outside [1, s] are skipped; `samples` placements per size. In 3D
// the third length equals l2.
std::vector<RectQuery> gen_fixed_ratio(const Universe& u, Ratio rho, Coord step, Count samples, std::uint64_t seed);

// Smallest box containing two independent uniform cells.
std::vector<RectQuery> gen_random_corners(const Universe& u, Count count, std::uint64_t seed);

// Default cube sizes for the random-cubes experiment, scaled from the
// published s = 1024 (2D) and s = 512 (3D) lists.
std::vector<Coord> default_cube_sizes(int dim, Coord side);

struct BoxStats {
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
  double mean = 0;
  Count count = 0;
};

// Quantile at p: h = p (n - 1); whole h picks that element, a half h
// averages its neighbours, other h round to the nearest element.
BoxStats box_stats(std::vector<double> values);

enum class Experiment { random_cubes, fixed_ratio, random_corners };

std::string_view to_string(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

struct BenchConfig {
  Experiment experiment = Experiment::random_cubes;
  int dim = 2;
  Coord side = 256;
  std::vector<CurveKind> curves;
  std::vector<Coord> sizes;    // random cubes; empty = default_cube_sizes
  Count count = 1000;          // queries per size (cubes) or in total (corners)
  std::vector<Ratio> ratios;   // fixed ratio; empty = published_ratios
  Coord step = 0;              // fixed ratio; 0 = max(1, 50 s / 1024)
  Count samples_per_size = 20;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct BenchRow {
  CurveKind curve;
  RectQuery query;
  Count clusters = 0;
};

struct StatsRow {
  CurveKind curve;
  std::optional<Extent> lengths;  // empty for random corners (mixed sizes)
  BoxStats stats;
};

struct BenchResult {
  int dim = 2;
  Coord side = 0;
  std::vector<BenchRow> rows;   // sorted
  std::vector<StatsRow> stats;  // sorted by curve, then lengths
};

// Generates the queries once and evaluates every curve on them. Throws
// std::invalid_argument when a curve does not support the universe.
BenchResult run_benchmark(const BenchConfig& config);

}  // namespace sfc
