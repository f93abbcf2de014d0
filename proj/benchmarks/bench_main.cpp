// Copyright 2026 The abcontrast authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <complex>

#include "abcontrast/closed_form.hpp"
#include "abcontrast/contrast.hpp"
#include "abcontrast/phase.hpp"
#include "abcontrast/scan.hpp"
#include "abcontrast/scenario.hpp"

namespace {

using namespace abcontrast;

void BM_bessel_j0_series(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    benchmark::DoNotOptimize(bessel_j0(3.0 + x));
  }
}
BENCHMARK(BM_bessel_j0_series);

void BM_bessel_j0_asymptotic(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    benchmark::DoNotOptimize(bessel_j0(40.0 + x));
  }
}
BENCHMARK(BM_bessel_j0_asymptotic);

void BM_oracle_time_average(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_time_average(1.3, 0.7, n));
  }
}
BENCHMARK(BM_oracle_time_average)->Arg(256)->Arg(1024)->Arg(4096);

void BM_planewave_closed_form(benchmark::State& state) {
  PlaneWaveScenario sc;
  sc.geom = benchmark_scenario().geom;
  sc.amplitude_E0 = benchmark_scenario().amplitude_E0;
  sc.omega = benchmark_scenario().omega;
  for (auto _ : state) {
    benchmark::DoNotOptimize(planewave_C(sc));
  }
}
BENCHMARK(BM_planewave_closed_form);

void BM_compute_C_planewave(benchmark::State& state) {
  const Scenario sc = benchmark_scenario();
  const TrajectoryPair pair = sc.make_trajectory();
  const auto field = sc.make_field();
  QuadratureSettings settings;
  settings.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_C(pair, *field, settings));
  }
}
BENCHMARK(BM_compute_C_planewave)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_scan_closed_form(benchmark::State& state) {
  ScanSpec spec;
  spec.swept_parameter = SweptParameter::amplitude;
  spec.base_scenario = benchmark_scenario();
  spec.engine = Engine::closed_form;
  spec.range.lo = 100.0;
  spec.range.hi = 20000.0;
  spec.range.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scan(spec));
  }
}
BENCHMARK(BM_scan_closed_form)->Arg(101)->Arg(901)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
