// Copyright 2026 The ABCs Authors. All rights reserved.
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


#include <memory>
#include <string>

#include "benchmark/benchmark.h"
#include "abcs/detector/chi_squared.h"
#include "abcs/environments/registry.h"
#include "abcs/evaluation/best_response.h"
#include "abcs/learners/factory.h"

namespace abcs {
namespace {

// Iterations per second with node throughput as a counter.
void BM_Iteration(benchmark::State& state, const std::string& env,
                  const std::string& algo) {
  auto game = BuildEnvironment(env);
  auto learner = MakeLearner(algo, game, LearnerConfig{}, 0);
  std::int64_t start = learner->nodes_touched();
  for (auto _ : state) learner->RunIteration();
  state.counters["nodes"] = benchmark::Counter(
      static_cast<double>(learner->nodes_touched() - start),
      benchmark::Counter::kIsRate);
}

BENCHMARK_CAPTURE(BM_Iteration, kuhn_es, "kuhn", "es-mccfr");
BENCHMARK_CAPTURE(BM_Iteration, kuhn_os, "kuhn", "os-mccfr");
BENCHMARK_CAPTURE(BM_Iteration, kuhn_bql, "kuhn", "bql");
BENCHMARK_CAPTURE(BM_Iteration, kuhn_maxcfr, "kuhn", "maxcfr");
BENCHMARK_CAPTURE(BM_Iteration, kuhn_bootcfr, "kuhn", "bootcfr");
BENCHMARK_CAPTURE(BM_Iteration, kuhn_abcs, "kuhn", "abcs");
BENCHMARK_CAPTURE(BM_Iteration, leduc_es, "leduc", "es-mccfr");
BENCHMARK_CAPTURE(BM_Iteration, leduc_maxcfr, "leduc", "maxcfr");
BENCHMARK_CAPTURE(BM_Iteration, leduc_abcs, "leduc", "abcs");
BENCHMARK_CAPTURE(BM_Iteration, cartpole_bql, "cartpole", "bql");
BENCHMARK_CAPTURE(BM_Iteration, cartpole_os, "cartpole", "os-mccfr");
BENCHMARK_CAPTURE(BM_Iteration, cartpole_abcs, "cartpole", "abcs");

void BM_LeducExploitability(benchmark::State& state) {
  auto game = BuildEnvironment("leduc");
  const GameTree& tree = CachedTree(*game);
  UniformPolicy uniform;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Exploitability(*game, tree, uniform));
  }
}
BENCHMARK(BM_LeducExploitability)->Unit(benchmark::kMillisecond);

void BM_ChiSquaredSurvival(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ChiSquaredSurvival(x, 7));
    x = x < 40 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_ChiSquaredSurvival);

}  // namespace
}  // namespace abcs

BENCHMARK_MAIN();
