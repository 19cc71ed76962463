#include "sfc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sfc/clustering.hpp"

namespace sfc {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % range;
}

std::string Ratio::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

const std::vector<Ratio>& published_ratios() {
  static const std::vector<Ratio> ratios{{1, 1024}, {1, 512}, {1, 4}, {1, 2},   {3, 4},   {1, 1},
                                         {4, 3},    {2, 1},   {4, 1}, {512, 1}, {1024, 1}};
  return ratios;
}

namespace {

Cell random_origin(SplitMix64& rng, const Universe& u, const Extent& lengths) {
  Cell o = Cell::filled(u.dim(), 0);
  for (int a = 0; a < u.dim(); ++a) o[a] = static_cast<Coord>(rng.uniform(static_cast<std::uint64_t>(u.side() - lengths[a])));
  return o;
}

}  // namespace

std::vector<RectQuery> gen_random_cubes(const Universe& u, Coord l, Count count, std::uint64_t seed) {
  if (l < 1 || l > u.side())
    throw std::invalid_argument("cube side " + std::to_string(l) + " outside [1, " + std::to_string(u.side()) + "]");
  SplitMix64 rng(seed);
  const Extent lengths = Extent::filled(u.dim(), l);
  std::vector<RectQuery> out;
  out.reserve(static_cast<std::size_t>(std::max<Count>(count, 0)));
  for (Count i = 0; i < count; ++i) out.emplace_back(u, random_origin(rng, u, lengths), lengths);
  return out;
}

std::vector<RectQuery> gen_fixed_ratio(const Universe& u, Ratio rho, Coord step, Count samples, std::uint64_t seed) {
  if (rho.num <= 0 || rho.den <= 0) throw std::invalid_argument("ratio must be positive");
  if (step < 1) throw std::invalid_argument("step must be at least 1");
  SplitMix64 rng(seed);
  std::vector<RectQuery> out;
  for (Coord l2 = u.side(); l2 >= 1; l2 -= step) {
    const Coord l1 = l2 * rho.den / rho.num;
    if (l1 < 1 || l1 > u.side()) continue;
    const Extent lengths = u.dim() == 2 ? Extent(l1, l2) : Extent(l1, l2, l2);
    for (Count i = 0; i < samples; ++i) out.emplace_back(u, random_origin(rng, u, lengths), lengths);
  }
  return out;
}

std::vector<RectQuery> gen_random_corners(const Universe& u, Count count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  SplitMix64 rng(seed);
  std::vector<RectQuery> out;
  out.reserve(static_cast<std::size_t>(count));
  const auto bound = static_cast<std::uint64_t>(u.side() - 1);
  for (Count i = 0; i < count; ++i) {
    Cell a = Cell::filled(u.dim(), 0), b = a, origin = a;
    for (int k = 0; k < u.dim(); ++k) a[k] = static_cast<Coord>(rng.uniform(bound));
    for (int k = 0; k < u.dim(); ++k) b[k] = static_cast<Coord>(rng.uniform(bound));
    Extent lengths = Extent::filled(u.dim(), 0);
    for (int k = 0; k < u.dim(); ++k) {
      origin[k] = std::min(a[k], b[k]);
      lengths[k] = std::max(a[k], b[k]) - origin[k] + 1;
    }
    out.emplace_back(u, origin, lengths);
  }
  return out;
}

std::vector<Coord> default_cube_sizes(int dim, Coord side) {
  std::vector<Coord> sizes;
  if (dim == 2) {
    const Coord step = std::max<Coord>(1, 50 * side / 1024);
    for (Coord k = 1; k <= 19; k += 2)
      if (side - step * k >= 1) sizes.push_back(side - step * k);
  } else {
    const Coord step = std::max<Coord>(1, 40 * side / 512);
    for (Coord k : {1, 2, 8, 9, 10, 11, 12})
      if (side - step * k >= 1) sizes.push_back(side - step * k);
  }
  return sizes;
}

BoxStats box_stats(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("box statistics need at least one value");
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  auto quantile = [&](double p) {
    const double h = p * static_cast<double>(n - 1);
    const double lo = std::floor(h);
    const double frac = h - lo;
    const auto i = static_cast<std::size_t>(lo);
    if (frac == 0.0) return values[i];
    if (frac == 0.5) return (values[i] + values[i + 1]) / 2;
    return values[frac < 0.5 ? i : i + 1];
  };
  BoxStats out;
  out.min = values.front();
  out.max = values.back();
  out.q1 = quantile(0.25);
  out.median = quantile(0.5);
  out.q3 = quantile(0.75);
  double sum = 0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(n);
  out.count = static_cast<Count>(n);
  return out;
}

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::random_cubes:
      return "random-cubes";
    case Experiment::fixed_ratio:
      return "fixed-ratio";
    case Experiment::random_corners:
      return "random-corners";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (Experiment e : {Experiment::random_cubes, Experiment::fixed_ratio, Experiment::random_corners})
    if (to_string(e) == name) return e;
  return std::nullopt;
}

namespace {

auto row_key(const BenchRow& r) {
  return std::make_tuple(static_cast<int>(r.curve), r.query.lengths(), r.query.origin(), r.clusters);
}

std::vector<RectQuery> generate(const BenchConfig& c, const Universe& u) {
  std::vector<RectQuery> queries;
  switch (c.experiment) {
    case Experiment::random_cubes: {
      const std::vector<Coord> sizes = c.sizes.empty() ? default_cube_sizes(c.dim, c.side) : c.sizes;
      SplitMix64 seeds(c.seed);
      for (Coord l : sizes) {
        auto batch = gen_random_cubes(u, l, c.count, seeds.next());
        queries.insert(queries.end(), batch.begin(), batch.end());
      }
      break;
    }
    case Experiment::fixed_ratio: {
      const std::vector<Ratio> ratios = c.ratios.empty() ? published_ratios() : c.ratios;
      const Coord step = c.step > 0 ? c.step : std::max<Coord>(1, 50 * c.side / 1024);
      SplitMix64 seeds(c.seed);
      for (const Ratio& rho : ratios) {
        auto batch = gen_fixed_ratio(u, rho, step, c.samples_per_size, seeds.next());
        queries.insert(queries.end(), batch.begin(), batch.end());
      }
      break;
    }
    case Experiment::random_corners:
      queries = gen_random_corners(u, c.count, c.seed);
      break;
  }
  return queries;
}

}  // namespace

BenchResult run_benchmark(const BenchConfig& config) {
  const Universe u(config.dim, config.side);
  BenchResult result;
  result.dim = config.dim;
  result.side = config.side;
  if (config.curves.empty()) return result;

  std::vector<Curve> curves;
  for (CurveKind k : config.curves) curves.emplace_back(k, u);
  const std::vector<RectQuery> queries = generate(config, u);

  for (const Curve& curve : curves) {
    std::vector<Count> counts(queries.size());
    const unsigned workers = std::max(1U, config.workers);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < queries.size(); i += workers) counts[i] = count_clusters(curve, queries[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < queries.size(); ++i) result.rows.push_back({curve.kind(), queries[i], counts[i]});
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return row_key(a) < row_key(b); });

  const bool group_by_size = config.experiment != Experiment::random_corners;
  std::map<std::pair<int, std::optional<Extent>>, std::vector<double>> groups;
  for (const BenchRow& r : result.rows) {
    std::optional<Extent> key;
    if (group_by_size) key = r.query.lengths();
    groups[{static_cast<int>(r.curve), key}].push_back(static_cast<double>(r.clusters));
  }
  for (auto& [key, values] : groups)
    result.stats.push_back({static_cast<CurveKind>(key.first), key.second, box_stats(std::move(values))});
  return result;
}

}  // namespace sfc
