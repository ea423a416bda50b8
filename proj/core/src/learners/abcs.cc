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

#include "abcs/learners/abcs.h"

#include "absl/container/inlined_vector.h"
#include "abcs/learners/softmax.h"

namespace abcs {

using Vec = absl::InlinedVector<double, 9>;

Abcs::Abcs(std::shared_ptr<const Game> game, LearnerConfig config,
           std::uint64_t seed)
    : Learner(std::move(game), std::move(config), seed),
      detector_(config_.detector) {
  if (!(config_.abcs_epsilon >= 0 && config_.abcs_epsilon <= 1)) {
    throw ConfigError("abcs_epsilon", "must lie in [0, 1]");
  }
}

int Abcs::Bank(int row, Action action) const {
  int base = table_.row(row).detector_base;
  return base >= 0 && detector_.Flag(base + action) ? 1 : 0;
}

int Abcs::DetectorBase(int row) {
  InfostateRow& r = table_.row(row);
  if (r.detector_base < 0) {
    r.detector_base =
        detector_.RegisterInfostate(table_.key(row), r.num_actions);
  }
  return r.detector_base;
}

double Abcs::Value(int row, Action action) const {
  return table_.values(row, Bank(row, action))[action];
}

bool Abcs::AnyNonstationary(int row) const {
  int base = table_.row(row).detector_base;
  if (base < 0) return false;
  for (Action a = 0; a < table_.row(row).num_actions; ++a) {
    if (detector_.Flag(base + a)) return true;
  }
  return false;
}

void Abcs::PolicyAt(int row, std::span<double> out) const {
  // Any flagged pair switches the whole infostate to Hedge on cumulative
  // values; otherwise it plays Boltzmann on the average values.
  const bool hedge = AnyNonstationary(row);
  const double tau = hedge ? config_.abcs_tau_nonstationary(iteration_)
                           : config_.abcs_tau_stationary(iteration_);
  for (Action a = 0; a < table_.row(row).num_actions; ++a) {
    int bank = Bank(row, a);
    out[a] = table_.values(row, bank)[a];
    if (hedge) {
      out[a] *= tau * static_cast<double>(table_.pair_counts(row, bank)[a]);
    }
  }
  if (hedge) {
    SoftmaxLogits(out, out);
  } else {
    SoftmaxPolicy(out, tau, out);
  }
}

void Abcs::Traverse(int traverser, std::unique_ptr<State> root) {
  stats_ = TraversalStats();
  if (root->IsTerminal()) return;
  Recurse(*root, RowFor(*root, traverser), traverser, 1.0, true);
}

double Abcs::Recurse(const State& state, int row, int traverser,
                     double reach, bool on_trajectory) {
  bool revisit = false;
  if (!game_->PerfectRecall()) {
    // An infostate is expanded at most once per iteration. Inside a
    // branched subtree a revisit ends the recursion; along the main
    // trajectory it only follows the sampled action.
    revisit = table_.row(row).expanded_iteration == iteration_;
    if (revisit && !on_trajectory) return 0.0;
    table_.row(row).expanded_iteration = iteration_;
  }
  ++stats_.expansions;
  if (on_trajectory) ++stats_.depth;
  const int base = DetectorBase(row);
  std::span<const double> frozen = FrozenPolicy(row);
  Vec policy(frozen.begin(), frozen.end());
  AccumulateAverage(row, policy, reach);
  ++table_.row(row).visits;
  const int num_actions = static_cast<int>(policy.size());

  const double epsilon = config_.abcs_epsilon;
  Action traj = trajectory_.Sample(policy);
  if (trajectory_.Uniform() < epsilon) traj = trajectory_.UniformInt(num_actions);

  Vec steps(num_actions);
  for (Action a = 0; a < num_actions; ++a) {
    Child child = GetChild(state, a, traverser);
    detector_.Record(base + a, child.reward, child.state->HiddenKey());
    bool nonstationary =
        detector_.CachedDetect(base + a, detector_rng_.Uniform());
    int bank = nonstationary ? 1 : 0;
    double next = 0.0;
    if (child.row >= 0) {
      int n = table_.row(child.row).num_actions;
      Vec q_next(n);
      for (Action b = 0; b < n; ++b) q_next[b] = Value(child.row, b);
      next = q_next[Argmax(q_next)];
    }
    double grad =
        child.reward + config_.gamma * next - table_.values(row, bank)[a];
    bool branched = nonstationary && !revisit;
    if (child.row >= 0 && (branched || a == traj)) {
      double child_reach = reach * policy[a];
      if (!branched) {
        // Sampled rather than expanded: importance-correct the self reach.
        child_reach /= (1.0 - epsilon) * policy[a] + epsilon / num_actions;
      }
      double sub =
          Recurse(*child.state, child.row, traverser,
                  ChildReach(state, *child.state, child_reach),
                  on_trajectory && a == traj);
      if (nonstationary) {
        grad += static_cast<double>(table_.row(child.row).visits) * sub;
      }
    }
    std::int64_t count = ++table_.pair_counts(row, bank)[a];
    steps[a] = grad / static_cast<double>(count);
    table_.values(row, bank)[a] += steps[a];
    ++stats_.q_updates;
  }
  Vec q(num_actions);
  for (Action a = 0; a < num_actions; ++a) q[a] = Value(row, a);
  return steps[Argmax(q)];
}

}  // namespace abcs
