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

#ifndef ABCS_HARNESS_EXPERIMENT_H_
#define ABCS_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "abcs/harness/config.h"
#include "abcs/learners/learner.h"

namespace abcs {

struct ResultRow {
  std::string algo;
  std::string env;
  std::uint64_t seed = 0;
  std::int64_t iteration = 0;
  std::int64_t nodes_touched = 0;
  std::string metric;
  double value = 0.0;

  bool operator==(const ResultRow&) const = default;
};

using RowSink = std::function<void(const ResultRow&)>;

// Metrics for the learner's current tables. Per environment:
//   wrps, kuhn, leduc: exploitability of the average policy
//   tictactoe:         exploitability of the greedy policy
//   cartpole:          episode_return and regret of the greedy policy
//   stacked:           cartpole_regret (greedy) and leduc_exploitability
//                      (average policy on standalone Leduc)
// plus nonstationary_fraction when the learner has a detector (stacked
// adds nonstationary_fraction_cartpole and nonstationary_fraction_leduc).
std::vector<ResultRow> Evaluate(const RunConfig& config,
                                const Learner& learner);

// Learns until the node budget is spent, evaluating at iteration 0, every
// `eval_every_nodes` nodes, and at the end. Rows are passed to `sink` as
// they are produced and also returned.
std::vector<ResultRow> RunExperiment(const RunConfig& config,
                                     const RowSink& sink = nullptr);

}  // namespace abcs

#endif  // ABCS_HARNESS_EXPERIMENT_H_
