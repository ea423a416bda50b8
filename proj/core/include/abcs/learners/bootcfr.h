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

#ifndef ABCS_LEARNERS_BOOTCFR_H_
#define ABCS_LEARNERS_BOOTCFR_H_

#include "absl/container/inlined_vector.h"
#include "abcs/learners/learner.h"

namespace abcs {

// External sampling written as a bootstrapped running-average update: the
// child's increments are folded back in expectation under the child's
// pre-update policy. Requires a perfect-recall game.
class BootCfr : public Learner {
 public:
  BootCfr(std::shared_ptr<const Game> game, LearnerConfig config,
          std::uint64_t seed);

  std::string Name() const override { return "bootcfr"; }
  void PolicyAt(int row, std::span<double> out) const override;

 protected:
  void Traverse(int traverser, std::unique_ptr<State> root) override;

 private:
  using Vec = absl::InlinedVector<double, 9>;
  // Fills `delta` with this visit's increments to Q(s, .).
  void Recurse(const State& state, int row, int traverser, double reach,
               Vec& delta);
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_BOOTCFR_H_
