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

#ifndef ABCS_LEARNERS_ABCS_H_
#define ABCS_LEARNERS_ABCS_H_

#include <cstdint>

#include "abcs/detector/detector.h"
#include "abcs/learners/learner.h"

namespace abcs {

// Adaptive branching: every action at a visited infostate gets a one-step
// update, but only the sampled trajectory action and the actions whose
// (s, a) pair is flagged nonstationary are expanded. Nonstationary
// expansions also fold in the child's bootstrapped gradient.
//
// An infostate with any flagged pair plays Hedge on cumulative values
// (tau_nonstationary); otherwise Boltzmann on average values
// (tau_stationary as a temperature). With dual tables each pair reads and
// writes the value bank of its own flag.
class Abcs : public Learner {
 public:
  struct TraversalStats {
    std::int64_t q_updates = 0;
    std::int64_t expansions = 0;
    // Traverser decisions along the sampled trajectory.
    std::int64_t depth = 0;
  };

  Abcs(std::shared_ptr<const Game> game, LearnerConfig config,
       std::uint64_t seed);

  std::string Name() const override { return "abcs"; }
  double Value(int row, Action action) const override;
  void PolicyAt(int row, std::span<double> out) const override;
  const Detector* detector() const override { return &detector_; }

  // Counts from the most recent traversal.
  const TraversalStats& last_traversal() const { return stats_; }

 protected:
  void Traverse(int traverser, std::unique_ptr<State> root) override;

 private:
  double Recurse(const State& state, int row, int traverser, double reach,
                 bool on_trajectory);
  int Bank(int row, Action action) const;
  bool AnyNonstationary(int row) const;
  int DetectorBase(int row);

  Detector detector_;
  TraversalStats stats_;
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_ABCS_H_
