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

#ifndef ABCS_LEARNERS_OS_MCCFR_H_
#define ABCS_LEARNERS_OS_MCCFR_H_

#include "abcs/learners/learner.h"

namespace abcs {

// Outcome-sampling MCCFR with Hedge on cumulative importance-weighted
// counterfactual values. The traverser follows
// (1 - epsilon) * policy + epsilon * uniform; others play on-policy.
class OsMccfr : public Learner {
 public:
  OsMccfr(std::shared_ptr<const Game> game, LearnerConfig config,
          std::uint64_t seed);

  std::string Name() const override { return "os-mccfr"; }
  // V(s, a) / CNT(s).
  double Value(int row, Action action) const override;
  void PolicyAt(int row, std::span<double> out) const override;

  // Updates dropped because the importance weight overflowed.
  std::int64_t skipped_updates() const { return skipped_; }

 protected:
  void Traverse(int traverser, std::unique_ptr<State> root) override;

 private:
  // Importance-weighted return of the target policy from `state`.
  double Recurse(const State& state, int row, int traverser, double own_reach,
                 double behavior_reach);

  std::int64_t skipped_ = 0;
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_OS_MCCFR_H_
