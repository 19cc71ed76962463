#include <benchmark/benchmark.h>

#include "sfc/clustering.hpp"
#include "sfc/experiments.hpp"

using namespace sfc;

namespace {

// Random cubes of side range(1) in a 2D universe of side 1024.
void BM_CountClusters2d(benchmark::State& state) {
  const auto kind = static_cast<CurveKind>(state.range(0));
  const Universe u(2, 1024);
  const Curve curve(kind, u);
  const auto queries = gen_random_cubes(u, state.range(1), 64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_clusters(curve, queries[i]));
    i = (i + 1) % queries.size();
  }
  state.SetLabel(std::string(curve.name()));
}

void BM_SortDecomposition2d(benchmark::State& state) {
  const Universe u(2, 1024);
  const Curve curve(CurveKind::hilbert2d, u);
  const auto queries = gen_random_cubes(u, state.range(0), 16, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(clusters_of_query(curve, queries[i]).count());
    i = (i + 1) % queries.size();
  }
}

void BM_CountClusters3d(benchmark::State& state) {
  const auto kind = static_cast<CurveKind>(state.range(0));
  const Universe u(3, 128);
  const Curve curve(kind, u);
  const auto queries = gen_random_cubes(u, state.range(1), 16, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_clusters(curve, queries[i]));
    i = (i + 1) % queries.size();
  }
  state.SetLabel(std::string(curve.name()));
}

void BM_AverageFast(benchmark::State& state) {
  const Universe u(2, state.range(0));
  const Curve curve(CurveKind::onion2d, u);
  const TranslationQuerySet qs(u, Extent::filled(2, state.range(0) / 3));
  for (auto _ : state) benchmark::DoNotOptimize(avg_clustering_fast(curve, qs));
}

}  // namespace

BENCHMARK(BM_CountClusters2d)
    ->ArgsProduct({{static_cast<long>(CurveKind::onion2d), static_cast<long>(CurveKind::hilbert2d),
                    static_cast<long>(CurveKind::z2d), static_cast<long>(CurveKind::rowmajor)},
                   {32, 256, 900}});
BENCHMARK(BM_SortDecomposition2d)->Arg(32)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CountClusters3d)
    ->ArgsProduct({{static_cast<long>(CurveKind::onion3d), static_cast<long>(CurveKind::hilbert3d)}, {16, 100}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AverageFast)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
