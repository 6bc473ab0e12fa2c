// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "puspec/class_sampler.hpp"

namespace {

using namespace puspec;

void BM_SingleSample(benchmark::State& state) {
  const PUBasis basis(BasisSpec{static_cast<int>(state.range(0))});
  const ColorTarget target{{0.33, 0.33}, 0.3};
  SamplingOptions options;
  options.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto samples = sample_class(basis, target, 1, seed++, options);
    benchmark::DoNotOptimize(samples);
  }
}
BENCHMARK(BM_SingleSample)->Arg(5)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_Batch1000(benchmark::State& state) {
  const PUBasis basis(BasisSpec{static_cast<int>(state.range(0))});
  const ColorTarget target{{0.41, 0.42}, 0.57};
  SamplingOptions options;
  options.threads = 1;
  for (auto _ : state) {
    auto samples = sample_class(basis, target, 1000, 42, options);
    benchmark::DoNotOptimize(samples);
  }
}
BENCHMARK(BM_Batch1000)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_EnclosingTriangles(benchmark::State& state) {
  const PUBasis basis(BasisSpec{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enclosing_triangles(basis, {0.33, 0.33}));
}
BENCHMARK(BM_EnclosingTriangles)->Arg(5)->Arg(11)->Arg(21);

void BM_MaxLuminanceLp(benchmark::State& state) {
  const PUBasis basis(BasisSpec{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(max_luminance_weights(basis, {0.38, 0.45}));
}
BENCHMARK(BM_MaxLuminanceLp)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMicrosecond);

}  // namespace
