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

#include "abcs/learners/bql.h"

#include "abcs/learners/softmax.h"

namespace abcs {

void Bql::PolicyAt(int row, std::span<double> out) const {
  SoftmaxPolicy(table_.values(row), config_.bql_tau(iteration_), out);
}

void Bql::Traverse(int traverser, std::unique_ptr<State> root) {
  std::unique_ptr<State> state = std::move(root);
  while (!state->IsTerminal()) {
    int row = RowFor(*state, traverser);
    std::span<const double> policy = FrozenPolicy(row);
    // Sampled on-policy, so the importance-corrected self reach is 1.
    AccumulateAverage(row, policy, 1.0);
    ++table_.row(row).visits;
    Action a = trajectory_.Sample(policy);
    Child child = GetChild(*state, a, traverser);
    double next = 0.0;
    if (child.row >= 0) {
      std::span<const double> q_next = table_.values(child.row);
      next = q_next[Argmax(q_next)];
    }
    double target = child.reward + config_.gamma * next;
    std::int64_t count = ++table_.pair_counts(row)[a];
    double& q = table_.values(row)[a];
    q += (target - q) / static_cast<double>(count);
    state = std::move(child.state);
  }
}

}  // namespace abcs
