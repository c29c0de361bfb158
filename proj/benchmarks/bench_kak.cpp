// Copyright 2026 The kcforge Authors
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

#include "kcforge/kak.hpp"
#include "kcforge/locc.hpp"
#include "kcforge/sampling.hpp"
#include "kcforge/schmidt.hpp"
#include "kcforge/synth.hpp"

namespace {

using namespace kcforge;

std::vector<TwoQubitUnitary> haar_batch(std::size_t n) {
  std::vector<TwoQubitUnitary> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = sample_rng(7, 0, i);
    out.emplace_back(haar_unitary4(rng));
  }
  return out;
}

void BM_Decompose(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(batch[i++ % batch.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Decompose);

void BM_DecomposeSwap(benchmark::State& state) {
  CMat4 swap;
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  const TwoQubitUnitary u(swap);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(u));
}
BENCHMARK(BM_DecomposeSwap);

void BM_EigSymmetricUnitary(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::vector<CMat4> s;
  for (const auto& u : batch) s.push_back(u.matrix().transpose() * u.matrix());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eig_symmetric_unitary(s[i++ % s.size()]));
}
BENCHMARK(BM_EigSymmetricUnitary);

void BM_OperatorSchmidt(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(operator_schmidt(batch[i++ % batch.size()]));
}
BENCHMARK(BM_OperatorSchmidt);

void BM_FactorIntoControlled(benchmark::State& state) {
  const auto batch = haar_batch(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor_into_controlled(batch[i++ % batch.size()]));
}
BENCHMARK(BM_FactorIntoControlled);

void BM_SynthesizeAndSimulate(benchmark::State& state) {
  Rng rng = sample_rng(7, 1, 0);
  const TwoQubitUnitary u(random_kc_unitary(2, rng));
  const QuadState input = QuadState::product(maximally_entangled(2), 2, CVecX{1.0, 0.0}, 1);
  for (auto _ : state) {
    const auto p = synthesize_protocol(u, Scenario::OnlyARefEntangled);
    benchmark::DoNotOptimize(simulate_protocol(input, u, p, Scenario::OnlyARefEntangled));
  }
}
BENCHMARK(BM_SynthesizeAndSimulate);

void BM_RestrictedSearch(benchmark::State& state) {
  Rng rng = sample_rng(7, 2, 0);
  const TwoQubitUnitary u(random_kc_unitary(3, rng, 0.1));
  SearchBudget budget;
  budget.ancilla_grid = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(search_restricted_protocols(u, Scenario::OnlyARefEntangled, budget));
}
BENCHMARK(BM_RestrictedSearch)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
