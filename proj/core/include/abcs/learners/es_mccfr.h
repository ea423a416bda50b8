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

#ifndef ABCS_LEARNERS_ES_MCCFR_H_
#define ABCS_LEARNERS_ES_MCCFR_H_

#include "abcs/learners/learner.h"

namespace abcs {

// External-sampling MCCFR with Hedge on cumulative sampled counterfactual
// values: the traverser expands all of its actions, everyone else is
// sampled once. Policy: softmax(tau_n * V(s, .)).
class EsMccfr : public Learner {
 public:
  using Learner::Learner;

  std::string Name() const override { return "es-mccfr"; }
  // V(s, a) / CNT(s).
  double Value(int row, Action action) const override;
  void PolicyAt(int row, std::span<double> out) const override;

 protected:
  void Traverse(int traverser, std::unique_ptr<State> root) override;

 private:
  // Sampled value of `state` under the traverser's current policy.
  double Recurse(const State& state, int row, int traverser, double reach);
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_ES_MCCFR_H_
