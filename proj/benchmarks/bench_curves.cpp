#include <benchmark/benchmark.h>

#include "sfc/curves.hpp"

using namespace sfc;

namespace {

Universe universe_for(CurveKind kind, Coord side) { return Universe(curve_dimension(kind), side); }

void BM_Index(benchmark::State& state) {
  const auto kind = static_cast<CurveKind>(state.range(0));
  const Coord side = state.range(1);
  const Curve curve(kind, universe_for(kind, side));
  const Count n = curve.universe().cells();
  Rank r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.index(curve.cell_at(r)));
    r = (r + 7919) % n;
  }
  state.SetLabel(std::string(curve.name()));
  state.SetItemsProcessed(state.iterations());
}

void curve_args(benchmark::internal::Benchmark* b) {
  for (CurveKind k : all_curve_kinds()) b->Args({static_cast<long>(k), curve_dimension(k) == 2 ? 1024 : 128});
}

// Curve construction includes the discontinuity scan for onion3d.
void BM_ConstructOnion3d(benchmark::State& state) {
  const Universe u(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Curve(CurveKind::onion3d, u));
}

}  // namespace

BENCHMARK(BM_Index)->Apply(curve_args);
BENCHMARK(BM_ConstructOnion3d)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
