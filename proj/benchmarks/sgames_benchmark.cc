// Copyright 2026 The sgames Authors.
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

#include "sgames/canonical.h"
#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/enumerate.h"
#include "sgames/suites.h"
#include "sgames/weights.h"

namespace sgames {
namespace {

void BM_IsWeightedCouncil(benchmark::State& state) {
  const SimpleGame g = make_unsc();
  for (auto _ : state) benchmark::DoNotOptimize(is_weighted(g));
}
BENCHMARK(BM_IsWeightedCouncil);

void BM_IsWeightedKOutOfN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimpleGame g = make_k_out_of_n(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_weighted(g));
}
BENCHMARK(BM_IsWeightedKOutOfN)->Arg(6)->Arg(10)->Arg(14);

void BM_IsWeightedIncomplete(benchmark::State& state) {
  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  const SimpleGame g = compose(b2, 1, make_k_out_of_n(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(is_weighted(g));
}
BENCHMARK(BM_IsWeightedIncomplete);

void BM_FindDecompositions(benchmark::State& state) {
  const SimpleGame g = make_unsc();
  for (auto _ : state) benchmark::DoNotOptimize(find_decompositions(g));
}
BENCHMARK(BM_FindDecompositions)->Unit(benchmark::kMillisecond);

void BM_IndecomposableT3(benchmark::State& state) {
  const SimpleGame g = make_type(Family::kT3, {2, 1, 3}, {1, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(is_indecomposable(g));
}
BENCHMARK(BM_IndecomposableT3);

void BM_EnumerateFour(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_games(4));
}
BENCHMARK(BM_EnumerateFour);

void BM_CanonicalCouncil(benchmark::State& state) {
  const SimpleGame g = make_unsc();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_decompose(g));
}
BENCHMARK(BM_CanonicalCouncil)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sgames

BENCHMARK_MAIN();
