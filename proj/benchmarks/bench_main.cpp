#include "favard/projection.hpp"
#include "favard/quadrature.hpp"
#include "favard/spectral.hpp"
#include "favard/tiling.hpp"

#include <benchmark/benchmark.h>

using namespace favard;

static void BM_ProjectionMeasure(benchmark::State& state) {
  const auto ds = four_corner();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(projection_measure(ds, n, Slope::rational(2, 1)));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_ProjectionMeasure)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CountingFunction(benchmark::State& state) {
  const auto ds = four_corner();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(l2_norm_sq(ds, n, Slope::rational(1, 2)));
}
BENCHMARK(BM_CountingFunction)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_FloatProjection(benchmark::State& state) {
  const ProjectionEvaluator eval(four_corner(), static_cast<int>(state.range(0)));
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.length(theta));
    theta += 1e-4;
  }
}
BENCHMARK(BM_FloatProjection)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_FavardLength(benchmark::State& state) {
  QuadratureSpec spec;
  spec.nodes = 256;
  for (auto _ : state) benchmark::DoNotOptimize(favard_length(four_corner(), static_cast<int>(state.range(0)), spec));
}
BENCHMARK(BM_FavardLength)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_LevelSymbol(benchmark::State& state) {
  const auto ds = four_corner();
  double y = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_symbol(ds, 10, Side::a, y));
    y += 0.01;
  }
}
BENCHMARK(BM_LevelSymbol);

static void BM_ZeroSetScan(benchmark::State& state) {
  const auto ds = four_corner();
  for (auto _ : state) benchmark::DoNotOptimize(zero_set_scan(ds, static_cast<int>(state.range(0)), 0.05));
}
BENCHMARK(BM_ZeroSetScan)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ComplementSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(complement_search({0, 1, 2, 4}, 64));
}
BENCHMARK(BM_ComplementSearch)->Unit(benchmark::kMillisecond);

static void BM_TilingCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tiling_check({0, 3, 6, 9}, {0, 1, 2}, 12));
}
BENCHMARK(BM_TilingCheck);
BENCHMARK_MAIN();
