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

#include "abcs/learners/maxcfr.h"

#include "absl/container/inlined_vector.h"
#include "abcs/learners/softmax.h"

namespace abcs {

using Vec = absl::InlinedVector<double, 9>;

void MaxCfr::PolicyAt(int row, std::span<double> out) const {
  double scale = config_.cfr_tau(iteration_) *
                 static_cast<double>(table_.row(row).visits);
  std::span<const double> q = table_.values(row);
  for (std::size_t a = 0; a < q.size(); ++a) out[a] = q[a] * scale;
  SoftmaxLogits(out, out);
}

void MaxCfr::Traverse(int traverser, std::unique_ptr<State> root) {
  if (root->IsTerminal()) return;
  Recurse(*root, RowFor(*root, traverser), traverser, 1.0);
}

double MaxCfr::Recurse(const State& state, int row, int traverser,
                       double reach) {
  if (!game_->PerfectRecall()) {
    // At most one expansion per infostate per iteration.
    if (table_.row(row).expanded_iteration == iteration_) return 0.0;
    table_.row(row).expanded_iteration = iteration_;
  }
  std::span<const double> frozen = FrozenPolicy(row);
  Vec policy(frozen.begin(), frozen.end());
  AccumulateAverage(row, policy, reach);
  const std::int64_t visits = ++table_.row(row).visits;
  const int num_actions = static_cast<int>(policy.size());
  // Applied increments; the parent scales them back by this row's count.
  Vec steps(num_actions);
  for (Action a = 0; a < num_actions; ++a) {
    Child child = GetChild(state, a, traverser);
    double next = 0.0;
    if (child.row >= 0) {
      std::span<const double> q_next = table_.values(child.row);
      next = q_next[Argmax(q_next)];
    }
    double grad = child.reward + config_.gamma * next - table_.values(row)[a];
    if (child.row >= 0) {
      double sub =
          Recurse(*child.state, child.row, traverser,
                  ChildReach(state, *child.state, reach * policy[a]));
      grad += static_cast<double>(table_.row(child.row).visits) * sub;
    }
    steps[a] = grad / static_cast<double>(visits);
    table_.values(row)[a] += steps[a];
    ++table_.pair_counts(row)[a];
  }
  return steps[Argmax(table_.values(row))];
}

}  // namespace abcs
