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

#include "abcs/learners/es_mccfr.h"

#include "absl/container/inlined_vector.h"
#include "abcs/learners/softmax.h"

namespace abcs {

using Vec = absl::InlinedVector<double, 9>;

double EsMccfr::Value(int row, Action action) const {
  std::int64_t visits = table_.row(row).visits;
  return visits == 0 ? 0.0
                     : table_.values(row)[action] / static_cast<double>(visits);
}

void EsMccfr::PolicyAt(int row, std::span<double> out) const {
  double tau = config_.cfr_tau(iteration_);
  std::span<const double> v = table_.values(row);
  for (std::size_t a = 0; a < v.size(); ++a) out[a] = v[a] * tau;
  SoftmaxLogits(out, out);
}

void EsMccfr::Traverse(int traverser, std::unique_ptr<State> root) {
  if (root->IsTerminal()) return;
  Recurse(*root, RowFor(*root, traverser), traverser, 1.0);
}

double EsMccfr::Recurse(const State& state, int row, int traverser,
                        double reach) {
  std::span<const double> frozen = FrozenPolicy(row);
  Vec policy(frozen.begin(), frozen.end());
  const int num_actions = static_cast<int>(policy.size());
  if (!game_->PerfectRecall() &&
      table_.row(row).expanded_iteration == iteration_) {
    // Already expanded this iteration: follow one sampled action only.
    Action a = trajectory_.Sample(policy);
    Child child = GetChild(state, a, traverser);
    double tail = child.row < 0 ? 0.0
                                : Recurse(*child.state, child.row, traverser,
                                          reach * policy[a]);
    return child.reward + config_.gamma * tail;
  }
  table_.row(row).expanded_iteration = iteration_;
  AccumulateAverage(row, policy, reach);
  ++table_.row(row).visits;
  Vec sampled(num_actions);
  double value = 0.0;
  for (Action a = 0; a < num_actions; ++a) {
    Child child = GetChild(state, a, traverser);
    double tail = 0.0;
    if (child.row >= 0) {
      tail = Recurse(*child.state, child.row, traverser,
                     ChildReach(state, *child.state, reach * policy[a]));
    }
    sampled[a] = child.reward + config_.gamma * tail;
    value += policy[a] * sampled[a];
  }
  for (Action a = 0; a < num_actions; ++a) {
    table_.values(row)[a] += sampled[a];
    ++table_.pair_counts(row)[a];
  }
  return value;
}

}  // namespace abcs
