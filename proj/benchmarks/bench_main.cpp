// Copyright 2026 The boolcx Authors
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

#include "boolcx/adeg.hpp"
#include "boolcx/errors.hpp"
#include "boolcx/lp.hpp"
#include "boolcx/measures.hpp"
#include "boolcx/noisy.hpp"
#include "boolcx/walk.hpp"
#include "boolcx/zoo.hpp"

namespace {

using namespace boolcx;

// adeg LP for OR_n at degree d = n / 2, priced with the default rule
// (Dantzig with a Bland fallback) or with Bland's rule throughout.
void solve_or_program(benchmark::State& state, bool bland) {
  const int n = static_cast<int>(state.range(0));
  const auto lp = adeg_program(TruthTable(zoo::or_n(n)), n / 2);
  lp::SolverOptions opts;
  opts.always_bland = bland;
  std::int64_t pivots = 0;
  for (auto _ : state) {
    try {
      const auto out = lp::solve(lp, opts);
      pivots = out.pivots;
      benchmark::DoNotOptimize(out.objective);
    } catch (const Error& e) {
      state.SkipWithError(e.what());
      break;
    }
  }
  state.counters["pivots"] = static_cast<double>(pivots);
}

void BM_LpDantzig(benchmark::State& state) { solve_or_program(state, false); }
void BM_LpBland(benchmark::State& state) { solve_or_program(state, true); }
BENCHMARK(BM_LpDantzig)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpBland)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BlockSensitivity(benchmark::State& state) {
  const PartialFn f = zoo::sink(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(block_sensitivity(f).value);
}
BENCHMARK(BM_BlockSensitivity)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FractionalBs(benchmark::State& state) {
  const PartialFn f = zoo::sink(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fractional_block_sensitivity(f).value);
}
BENCHMARK(BM_FractionalBs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DecisionTree(benchmark::State& state) {
  const PartialFn f = zoo::or_n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decision_tree_depth(f));
}
BENCHMARK(BM_DecisionTree)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ConditionedWalk(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_conditioned_walk(0.02, T, T, rng).size());
}
BENCHMARK(BM_ConditionedWalk)->Arg(1)->Arg(5)->Arg(25);

void BM_BiasedBits(benchmark::State& state) {
  const auto params = WalkParams::make(0.02, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_biased_bits(params, true, state.range(0), 7).stats.walks);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BiasedBits)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
