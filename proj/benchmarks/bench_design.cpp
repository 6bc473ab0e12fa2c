// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "puspec/basis_design.hpp"
#include "puspec/effects.hpp"

namespace {

using namespace puspec;

void BM_BasisConstruction(benchmark::State& state) {
  const BasisSpec spec{static_cast<int>(state.range(0)), {0.66, 0.39}};
  for (auto _ : state) benchmark::DoNotOptimize(PUBasis(spec));
}
BENCHMARK(BM_BasisConstruction)->Arg(5)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_EvaluateDesign(benchmark::State& state) {
  const PUBasis basis(BasisSpec{7, {0.66, 0.39}});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_design(basis, RgbSpace::srgb));
}
BENCHMARK(BM_EvaluateDesign)->Unit(benchmark::kMicrosecond);

void BM_WarpSearch16(benchmark::State& state) {
  WarpSearchOptions options;
  options.grid = 16;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_warp(options));
}
BENCHMARK(BM_WarpSearch16)->Unit(benchmark::kMillisecond);

void BM_DepthTrajectory(benchmark::State& state) {
  const PUBasis basis(BasisSpec{7});
  const std::vector<double> w{0.9, 0.7, 0.2, 0.1, 0.4, 0.8, 0.6};
  const SpectralCurve T1 = basis.reconstruct(w);
  const auto depths = default_depth_grid();
  for (auto _ : state) benchmark::DoNotOptimize(depth_trajectory(T1, depths));
}
BENCHMARK(BM_DepthTrajectory)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
