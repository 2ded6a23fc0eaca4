// Copyright 2026 The polmaj Authors
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

#include "polmaj/majorize.hpp"
#include "polmaj/measures.hpp"
#include "polmaj/qfunction.hpp"
#include "polmaj/sphere_grid.hpp"

namespace {

void BM_DiscretizePure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = polmaj::GridSpec::make(static_cast<int>(state.range(1)),
                                           static_cast<int>(state.range(1)));
  const polmaj::AnyState psi = polmaj::random_pure(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polmaj::discretize(psi, grid, {.threads = 1}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.pixel_count()));
}
BENCHMARK(BM_DiscretizePure)->Args({2, 400})->Args({8, 400})->Args({8, 800})->Unit(benchmark::kMillisecond);

void BM_DiscretizeGeneric(benchmark::State& state) {
  const auto grid = polmaj::GridSpec::make(400, 400);
  const auto q = polmaj::make_q_function(polmaj::random_pure(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(polmaj::discretize(q, grid, {.threads = 1}));
  }
}
BENCHMARK(BM_DiscretizeGeneric)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DiscretizeAnalytic(benchmark::State& state) {
  const auto grid = polmaj::GridSpec::make(400, 400);
  const polmaj::AnyState t = polmaj::make_analytic(polmaj::AnalyticKind::kThermal, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polmaj::discretize(t, grid, {.threads = 1}));
  }
}
BENCHMARK(BM_DiscretizeAnalytic)->Unit(benchmark::kMillisecond);

void BM_Lorenz(benchmark::State& state) {
  const auto dist = polmaj::discretize(polmaj::random_pure(5, 2), polmaj::GridSpec{});
  for (auto _ : state) benchmark::DoNotOptimize(polmaj::lorenz(dist));
}
BENCHMARK(BM_Lorenz)->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State& state) {
  const auto a = polmaj::lorenz(polmaj::discretize(polmaj::make_phase(4), polmaj::GridSpec{}));
  const auto b = polmaj::lorenz(polmaj::discretize(polmaj::make_noon(4), polmaj::GridSpec{}));
  for (auto _ : state) benchmark::DoNotOptimize(polmaj::compare(a, b, 1e-4));
}
BENCHMARK(BM_Compare)->Unit(benchmark::kMicrosecond);

void BM_PartialOrder(benchmark::State& state) {
  const polmaj::GridSpec grid{};
  std::vector<polmaj::NamedDistribution> dists = {
      {"C", polmaj::discretize(polmaj::make_coherent(4), grid)},
      {"P", polmaj::discretize(polmaj::make_phase(4), grid)},
      {"S", polmaj::discretize(polmaj::make_squeezed(4), grid)},
      {"N", polmaj::discretize(polmaj::make_noon(4), grid)},
      {"H", polmaj::discretize(polmaj::make_hs_extremal(4), grid)}};
  for (auto _ : state) benchmark::DoNotOptimize(polmaj::partial_order(dists, 1e-4));
}
BENCHMARK(BM_PartialOrder)->Unit(benchmark::kMillisecond);

void BM_Renyi(benchmark::State& state) {
  const auto dist = polmaj::discretize(polmaj::random_pure(5, 3), polmaj::GridSpec{});
  const polmaj::EntropyIndex q(static_cast<double>(state.range(0)) / 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(polmaj::renyi(dist, q));
}
BENCHMARK(BM_Renyi)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ApplySu2(benchmark::State& state) {
  const auto psi = polmaj::random_pure(static_cast<int>(state.range(0)), 4);
  const polmaj::EulerRotation r(0.4, 1.2, -2.1);
  for (auto _ : state) benchmark::DoNotOptimize(polmaj::apply_su2(psi, r));
}
BENCHMARK(BM_ApplySu2)->Arg(4)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
