// Copyright 2026 The Fidelity Toolkit Authors
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

#include "fidelity/general.hpp"
#include "fidelity/nogo.hpp"
#include "fidelity/symmetry.hpp"

namespace {

using namespace fidelity;

void BM_IsotypicProjectors(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_projectors(d, n));
  state.SetLabel("d=" + std::to_string(d) + " n=" + std::to_string(n));
}
BENCHMARK(BM_IsotypicProjectors)
    ->Args({2, 1})->Args({2, 2})->Args({2, 4})->Args({3, 2})->Args({3, 3})->Args({3, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SolveMinimax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const GeneralInstance inst = make_instance(2, n, m, 200);
  for (auto _ : state) benchmark::DoNotOptimize(solve_minimax(inst));
}
BENCHMARK(BM_SolveMinimax)
    ->Args({1, 1})->Args({2, 1})->Args({1, 2})->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_NoGoCheck(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const TestOperator passing = random_equal_pair_passing_test(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nogo_check(passing));
}
BENCHMARK(BM_NoGoCheck)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_Twirl(benchmark::State& state) {
  const IsotypicDecomposition dec = isotypic_projectors(3, 3);
  Rng rng(3);
  const PureState psi = haar_random_state(dec.space_dim(), rng);
  const ComplexMatrix rho = pure_state_projector(psi).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(twirl(rho, dec));
}
BENCHMARK(BM_Twirl)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
