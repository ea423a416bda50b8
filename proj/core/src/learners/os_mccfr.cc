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

#include "abcs/learners/os_mccfr.h"

#include <cmath>

#include "absl/container/inlined_vector.h"
#include "abcs/learners/softmax.h"

namespace abcs {

using Vec = absl::InlinedVector<double, 9>;

OsMccfr::OsMccfr(std::shared_ptr<const Game> game, LearnerConfig config,
                 std::uint64_t seed)
    : Learner(std::move(game), std::move(config), seed) {
  if (!(config_.os_epsilon > 0 && config_.os_epsilon <= 1)) {
    throw ConfigError("os_epsilon", "must lie in (0, 1]");
  }
}

double OsMccfr::Value(int row, Action action) const {
  std::int64_t visits = table_.row(row).visits;
  return visits == 0 ? 0.0
                     : table_.values(row)[action] / static_cast<double>(visits);
}

void OsMccfr::PolicyAt(int row, std::span<double> out) const {
  double tau = config_.cfr_tau(iteration_);
  std::span<const double> v = table_.values(row);
  for (std::size_t a = 0; a < v.size(); ++a) out[a] = v[a] * tau;
  SoftmaxLogits(out, out);
}

void OsMccfr::Traverse(int traverser, std::unique_ptr<State> root) {
  if (root->IsTerminal()) return;
  Recurse(*root, RowFor(*root, traverser), traverser, 1.0, 1.0);
}

double OsMccfr::Recurse(const State& state, int row, int traverser,
                        double own_reach, double behavior_reach) {
  std::span<const double> frozen = FrozenPolicy(row);
  Vec policy(frozen.begin(), frozen.end());
  const int num_actions = static_cast<int>(policy.size());
  double weight = own_reach / behavior_reach;
  if (std::isfinite(weight)) AccumulateAverage(row, policy, weight);
  ++table_.row(row).visits;

  const double epsilon = config_.os_epsilon;
  Vec behavior(num_actions);
  for (Action a = 0; a < num_actions; ++a) {
    behavior[a] = (1.0 - epsilon) * policy[a] + epsilon / num_actions;
  }
  Action a = trajectory_.Sample(behavior);
  Child child = GetChild(state, a, traverser);
  double tail = 0.0;
  if (child.row >= 0) {
    tail = Recurse(*child.state, child.row, traverser, own_reach * policy[a],
                   behavior_reach * behavior[a]);
  }
  double ret = child.reward + config_.gamma * tail;
  double estimate = ret / (behavior_reach * behavior[a]);
  if (std::isfinite(estimate)) {
    table_.values(row)[a] += estimate;
  } else {
    ++skipped_;
  }
  ++table_.pair_counts(row)[a];
  return policy[a] / behavior[a] * ret;
}

}  // namespace abcs
