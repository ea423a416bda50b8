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

#ifndef ABCS_LEARNERS_MAXCFR_H_
#define ABCS_LEARNERS_MAXCFR_H_

#include "abcs/learners/learner.h"

namespace abcs {

// Bootstrapped external sampling: every traverser action is expanded and
// each child's post-update greedy gradient is folded back, scaled by the
// child's visit count. Policy: softmax(tau_n * CNT(s) * Q(s, .)).
class MaxCfr : public Learner {
 public:
  using Learner::Learner;

  std::string Name() const override { return "maxcfr"; }
  void PolicyAt(int row, std::span<double> out) const override;

 protected:
  void Traverse(int traverser, std::unique_ptr<State> root) override;

 private:
  double Recurse(const State& state, int row, int traverser, double reach);
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_MAXCFR_H_
