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

#ifndef ABCS_ENVIRONMENTS_STACKED_H_
#define ABCS_ENVIRONMENTS_STACKED_H_

#include <memory>
#include <string>

#include "abcs/environments/cartpole.h"
#include "abcs/environments/leduc_poker.h"
#include "abcs/game.h"

namespace abcs {

// Agent 0 plays one Cartpole episode, then one hand of Leduc against
// agent 1. Infostate keys inside each phase coincide with the standalone
// games, so policies learned here evaluate directly on those games.
class StackedState : public State {
 public:
  enum class Phase { kCartpole, kLeduc };

  explicit StackedState(const cartpole::Physics& physics);

  bool IsTerminal() const override {
    return phase_ == Phase::kLeduc && leduc_.IsTerminal();
  }
  PlayerId CurrentPlayer() const override;
  int NumActions() const override;
  std::vector<double> ChanceProbabilities() const override;
  InfostateKey Infostate(PlayerId player) const override;
  // Hidden state of the active phase only.
  std::string HiddenKey() const override;
  int Segment() const override { return phase_ == Phase::kCartpole ? 0 : 1; }
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<StackedState>(*this);
  }
  std::string ToString() const override;

  Phase phase() const { return phase_; }
  const CartpoleState& cartpole() const { return cartpole_; }
  const LeducState& leduc() const { return leduc_; }

 protected:
  Reward ApplyInPlace(Action action) override;

 private:
  Phase phase_ = Phase::kCartpole;
  CartpoleState cartpole_;
  LeducState leduc_;
};

class StackedGame : public Game {
 public:
  explicit StackedGame(double termination_probability = 1.0 / 100.0);

  std::string Name() const override { return "stacked"; }
  int NumAgents() const override { return 2; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<StackedState>(physics_);
  }
  bool PerfectRecall() const override { return false; }
  bool ZeroSum() const override { return false; }
  int MaxActions() const override { return cartpole::kNumInitialStates; }

  const cartpole::Physics& physics() const { return physics_; }

 private:
  cartpole::Physics physics_;
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_STACKED_H_
