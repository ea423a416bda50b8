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

#ifndef ABCS_ENVIRONMENTS_WEIGHTED_RPS_H_
#define ABCS_ENVIRONMENTS_WEIGHTED_RPS_H_

#include <memory>
#include <string>

#include "abcs/game.h"

namespace abcs {

// Rock-paper-scissors where a win with Rock pays 2 and any other win pays 1.
// Played sequentially; agent 1 does not observe agent 0's move.
namespace wrps {
enum Move : Action { kRock = 0, kPaper = 1, kScissors = 2 };
// Payoff to the player choosing `mine` against `theirs`.
double Payoff(Action mine, Action theirs);
}  // namespace wrps

class WeightedRpsState : public State {
 public:
  WeightedRpsState();

  bool IsTerminal() const override { return StepIndex() >= 2; }
  PlayerId CurrentPlayer() const override;
  int NumActions() const override { return IsTerminal() ? 0 : 3; }
  InfostateKey Infostate(PlayerId player) const override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<WeightedRpsState>(*this);
  }

 protected:
  Reward ApplyInPlace(Action action) override;
};

class WeightedRpsGame : public Game {
 public:
  std::string Name() const override { return "wrps"; }
  int NumAgents() const override { return 2; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<WeightedRpsState>();
  }
  bool PerfectRecall() const override { return true; }
  bool ZeroSum() const override { return true; }
  int MaxActions() const override { return 3; }
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_WEIGHTED_RPS_H_
