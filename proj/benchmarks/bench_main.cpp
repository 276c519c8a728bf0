// Copyright 2026 The nlqubit Authors
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

#include "nlqubit/integrate.hpp"
#include "nlqubit/optimize.hpp"
#include "nlqubit/scenarios.hpp"

namespace {

using namespace nlqubit;

void BM_SphereAverage(benchmark::State& state) {
  const QuadratureSpec q = QuadratureSpec::uniform(static_cast<int>(state.range(0)));
  const TargetMap map = TargetMap::general(2.0, 1.0);
  const AncillaVectors unot = buzek_unot();
  for (auto _ : state) benchmark::DoNotOptimize(quantum_fidelity(unot, map, q));
}
BENCHMARK(BM_SphereAverage)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_MeasurementFidelity(benchmark::State& state) {
  const QuadratureSpec q = QuadratureSpec::uniform(static_cast<int>(state.range(0)));
  const TargetMap map = TargetMap::rotation(1.0, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(measurement_fidelity(MeasurementScheme::rho3, map, q, -0.7));
  }
}
BENCHMARK(BM_MeasurementFidelity)->Arg(32)->Arg(64);

void BM_ExtractFunctional(benchmark::State& state) {
  const QuadratureSpec q = QuadratureSpec::uniform(static_cast<int>(state.range(0)));
  const TargetMap map = TargetMap::orthog(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(extract_functional(map, q));
}
BENCHMARK(BM_ExtractFunctional)->Arg(32)->Arg(64);

void BM_Maximize(benchmark::State& state) {
  const FidelityFunctional f = general_coefficients(1.3);
  for (auto _ : state) benchmark::DoNotOptimize(maximize(f));
}
BENCHMARK(BM_Maximize);

void BM_Sweep(benchmark::State& state) {
  ScenarioRequest req;
  req.family = Family::orthog;
  req.schemes = {SchemeSpec::of(MeasurementScheme::rho1), SchemeSpec::quantum_optimal()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(req, SweepParameter::delta, 0.0, 1.5, 17));
  }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
