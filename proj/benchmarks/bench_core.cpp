// Copyright 2026 The boxdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "boxdm/boxwell.hpp"
#include "boxdm/density.hpp"
#include "boxdm/hilbert.hpp"
#include "boxdm/scenario.hpp"

namespace {

using namespace boxdm;

void BM_PartialTrace(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const hilbert::SpaceLayout layout({d, d, 2});
  const auto m = hilbert::ComplexMatrix::identity(layout.total_dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert::partial_trace(m, layout, {0}));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(4)->Arg(8);

void BM_InteractionUnitary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scenario::interaction_unitary(1.0, std::numbers::pi / 2));
  }
}
BENCHMARK(BM_InteractionUnitary);

void BM_ScenarioPulse(benchmark::State& state) {
  const scenario::Scenario s(scenario::Amplitudes::standard());
  for (auto _ : state) benchmark::DoNotOptimize(s.measure_and_decohere());
}
BENCHMARK(BM_ScenarioPulse);

void BM_OverlapWeight(benchmark::State& state) {
  const boxwell::WellConfig well{};
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boxwell::overlap_weight(well, 1, l));
}
BENCHMARK(BM_OverlapWeight)->Arg(0)->Arg(20)->Arg(100);

void BM_SpectralDistribution(benchmark::State& state) {
  const boxwell::WellConfig well{};
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boxwell::spectral_distribution(well, 1, cutoff));
  }
}
BENCHMARK(BM_SpectralDistribution)->Arg(21)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_MomentumOracle(benchmark::State& state) {
  const boxwell::WellConfig well{};
  const std::vector<double> ps{static_cast<double>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(boxwell::momentum_density_oracle(well, 1, ps));
  }
}
BENCHMARK(BM_MomentumOracle)->Arg(1)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
