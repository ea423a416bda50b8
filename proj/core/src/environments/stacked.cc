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

#include "abcs/environments/stacked.h"

#include "abcs/environments/tags.h"

namespace abcs {

StackedState::StackedState(const cartpole::Physics& physics)
    : State(static_cast<std::uint8_t>(GameTag::kStacked)),
      cartpole_(physics) {}

PlayerId StackedState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!IsTerminal(), "terminal state has no player");
  return phase_ == Phase::kCartpole ? cartpole_.CurrentPlayer()
                                    : leduc_.CurrentPlayer();
}

int StackedState::NumActions() const {
  return phase_ == Phase::kCartpole ? cartpole_.NumActions()
                                    : leduc_.NumActions();
}

std::vector<double> StackedState::ChanceProbabilities() const {
  return phase_ == Phase::kCartpole ? cartpole_.ChanceProbabilities()
                                    : leduc_.ChanceProbabilities();
}

InfostateKey StackedState::Infostate(PlayerId player) const {
  return phase_ == Phase::kCartpole ? cartpole_.Infostate(player)
                                    : leduc_.Infostate(player);
}

std::string StackedState::HiddenKey() const {
  return phase_ == Phase::kCartpole ? cartpole_.HiddenKey()
                                    : leduc_.CanonicalKey();
}

Reward StackedState::ApplyInPlace(Action action) {
  if (phase_ == Phase::kLeduc) return leduc_.AdvanceInPlace(action);
  Reward r = cartpole_.AdvanceInPlace(action);
  if (cartpole_.IsTerminal()) phase_ = Phase::kLeduc;
  return r;
}

std::string StackedState::ToString() const {
  return phase_ == Phase::kCartpole ? "cartpole " + cartpole_.ToString()
                                    : "leduc " + leduc_.ToString();
}

StackedGame::StackedGame(double termination_probability) {
  ABCS_CHECK(termination_probability > 0 && termination_probability < 1);
  physics_.termination_probability = termination_probability;
}

}  // namespace abcs
