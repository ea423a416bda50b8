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

#ifndef ABCS_LEARNERS_LEARNER_H_
#define ABCS_LEARNERS_LEARNER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "abcs/detector/detector.h"
#include "abcs/evaluation/policy.h"
#include "abcs/game.h"
#include "abcs/learners/infostate_table.h"
#include "abcs/learners/schedule.h"
#include "abcs/random.h"

namespace abcs {

struct LearnerConfig {
  double gamma = 1.0;
  // Boltzmann temperature (values / tau).
  Schedule bql_tau{10.0, 0.99, 50};
  // Hedge step for MAX-CFR, BOOTCFR, ES-MCCFR and OS-MCCFR
  // (logits = tau * cumulative values).
  Schedule cfr_tau{1.0, 1.0, 1};
  double os_epsilon = 0.6;
  Schedule abcs_tau_stationary{1.0, 0.99, 20};
  Schedule abcs_tau_nonstationary{1.0, 1.0, 1};
  double abcs_epsilon = 0.0;
  bool dual_tables = false;
  DetectorConfig detector;
};

// Shared machinery for the tabular learners: infostate storage, the
// per-iteration frozen policies, the node counter, and the random streams.
//
// One iteration runs one traversal per agent in order 0, 1, ... Policies
// are frozen at iteration start: the first time a row is touched during
// iteration n its policy is computed and cached, and every later read in
// that iteration (by its owner or by opponents) uses the cached copy.
//
// Draw order: chance and opponent moves come from the world stream in
// traversal order; the traverser's own sampled moves and exploration
// coins come from the trajectory stream; stationarity-check coins come
// from the detector stream.
class Learner {
 public:
  Learner(std::shared_ptr<const Game> game, LearnerConfig config,
          std::uint64_t seed);
  virtual ~Learner() = default;

  virtual std::string Name() const = 0;

  void RunIteration();

  std::int64_t iteration() const { return iteration_; }
  std::int64_t nodes_touched() const { return nodes_; }
  const Game& game() const { return *game_; }
  const LearnerConfig& config() const { return config_; }
  const InfostateTable& table() const { return table_; }

  // Q-shaped estimate of the value of `action` at `row`, used for greedy
  // play and table comparisons.
  virtual double Value(int row, Action action) const;
  // Policy the learner would play now at `row` (not the frozen copy).
  virtual void PolicyAt(int row, std::span<double> out) const = 0;

  TabularPolicy AveragePolicy() const;
  TabularPolicy GreedyPolicy() const;
  TabularPolicy CurrentPolicy() const;

  virtual const Detector* detector() const { return nullptr; }

 protected:
  struct Child {
    std::unique_ptr<State> state;
    double reward = 0.0;
    int row = -1;  // traverser row at `state`; -1 when terminal
  };

  virtual void Traverse(int traverser, std::unique_ptr<State> root) = 0;

  // Applies `action` and counts the node.
  Transition Apply(const State& state, Action action);
  // Plays chance and the other agents until `traverser` acts or the game
  // ends, accumulating the traverser's discounted reward.
  void AdvanceToTraverser(std::unique_ptr<State>& state, int traverser,
                          double& reward, double& discount);
  // Takes `action` at a traverser node and advances to the next one.
  Child GetChild(const State& state, Action action, int traverser);

  int RowFor(const State& state, int player);
  std::span<const double> FrozenPolicy(int row);
  void AccumulateAverage(int row, std::span<const double> policy,
                         double weight);
  // Self-reach restarts at composite-game boundaries.
  static double ChildReach(const State& parent, const State& child,
                           double reach);

  int num_agents() const { return game_->NumAgents(); }

  std::shared_ptr<const Game> game_;
  LearnerConfig config_;
  InfostateTable table_;
  Rng world_;
  Rng trajectory_;
  Rng detector_rng_;
  std::int64_t iteration_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_LEARNER_H_
