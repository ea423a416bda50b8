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

#include "abcs/learners/bootcfr.h"

#include "abcs/learners/softmax.h"

namespace abcs {

BootCfr::BootCfr(std::shared_ptr<const Game> game, LearnerConfig config,
                 std::uint64_t seed)
    : Learner(std::move(game), std::move(config), seed) {
  if (!game_->PerfectRecall()) {
    throw ConfigError("algo", "bootcfr needs a perfect-recall environment");
  }
}

void BootCfr::PolicyAt(int row, std::span<double> out) const {
  double scale = config_.cfr_tau(iteration_) *
                 static_cast<double>(table_.row(row).visits);
  std::span<const double> q = table_.values(row);
  for (std::size_t a = 0; a < q.size(); ++a) out[a] = q[a] * scale;
  SoftmaxLogits(out, out);
}

void BootCfr::Traverse(int traverser, std::unique_ptr<State> root) {
  if (root->IsTerminal()) return;
  Vec delta;
  Recurse(*root, RowFor(*root, traverser), traverser, 1.0, delta);
}

void BootCfr::Recurse(const State& state, int row, int traverser,
                      double reach, Vec& delta) {
  std::span<const double> frozen = FrozenPolicy(row);
  Vec policy(frozen.begin(), frozen.end());
  AccumulateAverage(row, policy, reach);
  const double visits = static_cast<double>(++table_.row(row).visits);
  const int num_actions = static_cast<int>(policy.size());
  delta.assign(num_actions, 0.0);
  for (Action a = 0; a < num_actions; ++a) {
    Child child = GetChild(state, a, traverser);
    const double q_sa = table_.values(row)[a];
    double d;
    if (child.row < 0) {
      // A terminal child acts as one dummy action with Q = 0, delta = 0.
      d = (child.reward - q_sa) / visits;
    } else {
      std::span<const double> q_child = table_.values(child.row);
      Vec q_old(q_child.begin(), q_child.end());
      const int n = static_cast<int>(q_old.size());
      Vec grad(n);
      for (Action b = 0; b < n; ++b) {
        grad[b] = child.reward + config_.gamma * q_old[b] - q_sa;
      }
      Vec sub;
      Recurse(*child.state, child.row, traverser,
              ChildReach(state, *child.state, reach * policy[a]), sub);
      const double child_visits =
          static_cast<double>(table_.row(child.row).visits);
      Vec eval(n);
      double scale = config_.cfr_tau(iteration_) * (child_visits - 1.0);
      for (Action b = 0; b < n; ++b) eval[b] = q_old[b] * scale;
      SoftmaxLogits(eval, eval);
      d = 0.0;
      for (Action b = 0; b < n; ++b) {
        d += eval[b] * ((grad[b] + child_visits * sub[b]) / visits);
      }
    }
    table_.values(row)[a] += d;
    ++table_.pair_counts(row)[a];
    delta[a] = d;
  }
}

}  // namespace abcs
