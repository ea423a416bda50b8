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

#include "abcs/learners/learner.h"

#include "abcs/check.h"
#include "abcs/learners/softmax.h"

namespace abcs {

Learner::Learner(std::shared_ptr<const Game> game, LearnerConfig config,
                 std::uint64_t seed)
    : game_(std::move(game)),
      config_(std::move(config)),
      table_(config_.dual_tables),
      world_(MakeStream(seed, Stream::kWorld)),
      trajectory_(MakeStream(seed, Stream::kTrajectory)),
      detector_rng_(MakeStream(seed, Stream::kDetector)) {
  ABCS_CHECK(game_ != nullptr);
  if (!(config_.gamma > 0 && config_.gamma <= 1)) {
    throw ConfigError("gamma", "must lie in (0, 1]");
  }
}

void Learner::RunIteration() {
  ++iteration_;
  for (int agent = 0; agent < num_agents(); ++agent) {
    std::unique_ptr<State> root = game_->NewInitialState();
    ++nodes_;
    double reward = 0.0;
    double discount = 1.0;
    AdvanceToTraverser(root, agent, reward, discount);
    Traverse(agent, std::move(root));
  }
}

double Learner::Value(int row, Action action) const {
  return table_.values(row)[action];
}

Transition Learner::Apply(const State& state, Action action) {
  ++nodes_;
  return state.Child(action);
}

void Learner::AdvanceToTraverser(std::unique_ptr<State>& state, int traverser,
                                 double& reward, double& discount) {
  while (!state->IsTerminal()) {
    PlayerId player = state->CurrentPlayer();
    if (player.IsAgent() && player.agent() == traverser) return;
    Action a;
    if (player.IsChance()) {
      std::vector<double> probs = state->ChanceProbabilities();
      a = world_.Sample(probs);
    } else {
      a = world_.Sample(FrozenPolicy(RowFor(*state, player.agent())));
    }
    Transition t = Apply(*state, a);
    reward += discount * t.reward[traverser];
    discount *= config_.gamma;
    state = std::move(t.state);
  }
}

Learner::Child Learner::GetChild(const State& state, Action action,
                                 int traverser) {
  Transition t = Apply(state, action);
  Child child;
  child.reward = t.reward[traverser];
  child.state = std::move(t.state);
  double discount = config_.gamma;
  AdvanceToTraverser(child.state, traverser, child.reward, discount);
  if (!child.state->IsTerminal()) child.row = RowFor(*child.state, traverser);
  return child;
}

int Learner::RowFor(const State& state, int player) {
  return table_.Lookup(state.Infostate(PlayerId::Agent(player)),
                       state.NumActions());
}

std::span<const double> Learner::FrozenPolicy(int row) {
  InfostateRow& r = table_.row(row);
  if (r.frozen_iteration != iteration_) {
    PolicyAt(row, table_.policy(row));
    r.frozen_iteration = iteration_;
  }
  return table_.policy(row);
}

void Learner::AccumulateAverage(int row, std::span<const double> policy,
                                double weight) {
  std::span<double> avg = table_.average(row);
  for (std::size_t a = 0; a < avg.size(); ++a) avg[a] += weight * policy[a];
}

double Learner::ChildReach(const State& parent, const State& child,
                           double reach) {
  return parent.Segment() == child.Segment() ? reach : 1.0;
}

TabularPolicy Learner::AveragePolicy() const {
  TabularPolicy out;
  for (int id = 0; id < table_.size(); ++id) {
    std::span<const double> avg = table_.average(id);
    double total = 0.0;
    for (double x : avg) total += x;
    std::vector<double> probs(avg.size());
    for (std::size_t a = 0; a < avg.size(); ++a) {
      probs[a] = total > 0 ? avg[a] / total : 1.0 / avg.size();
    }
    out.Set(table_.key(id), std::move(probs));
  }
  return out;
}

TabularPolicy Learner::GreedyPolicy() const {
  TabularPolicy out(/*first_action_fallback=*/true);
  for (int id = 0; id < table_.size(); ++id) {
    int n = table_.row(id).num_actions;
    std::vector<double> values(n);
    for (int a = 0; a < n; ++a) values[a] = Value(id, a);
    std::vector<double> probs(n, 0.0);
    probs[Argmax(values)] = 1.0;
    out.Set(table_.key(id), std::move(probs));
  }
  return out;
}

TabularPolicy Learner::CurrentPolicy() const {
  TabularPolicy out;
  for (int id = 0; id < table_.size(); ++id) {
    std::vector<double> probs(table_.row(id).num_actions);
    PolicyAt(id, probs);
    out.Set(table_.key(id), std::move(probs));
  }
  return out;
}

}  // namespace abcs
