// Copyright 2026 The Boxwell Authors
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

#include "boxwell/eigensolve.hpp"
#include "boxwell/kummer.hpp"
#include "boxwell/oracle.hpp"

namespace {

void BM_Kummer(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boxwell::kummer_1f1(-2.3, 0.5, t));
}
BENCHMARK(BM_Kummer)->Arg(1)->Arg(36)->Arg(144);

void BM_KummerSplit(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boxwell::kummer_1f1_split(1, -1e-30, 0.5, t));
}
BENCHMARK(BM_KummerSplit)->Arg(36)->Arg(144);

void BM_LevelNu(benchmark::State& state) {
  const boxwell::Confinement box(static_cast<double>(state.range(0)));
  const boxwell::Level level(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(boxwell::level_nu(level, box));
}
BENCHMARK(BM_LevelNu)->Args({1, 0})->Args({3, 2})->Args({6, 3})->Args({12, 1});

void BM_FdSpectrum(benchmark::State& state) {
  const boxwell::Confinement box(3.0);
  boxwell::FdConfig cfg;
  cfg.num_interior_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boxwell::fd_spectrum(box, 2, cfg));
}
BENCHMARK(BM_FdSpectrum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
