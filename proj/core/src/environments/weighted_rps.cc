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

#include "abcs/environments/weighted_rps.h"

#include "abcs/environments/tags.h"

namespace abcs {
namespace wrps {

double Payoff(Action mine, Action theirs) {
  if (mine == theirs) return 0.0;
  // Rock beats scissors, paper beats rock, scissors beats paper.
  bool win = (mine == kRock && theirs == kScissors) ||
             (mine == kPaper && theirs == kRock) ||
             (mine == kScissors && theirs == kPaper);
  if (win) return mine == kRock ? 2.0 : 1.0;
  return -Payoff(theirs, mine);
}

}  // namespace wrps

WeightedRpsState::WeightedRpsState()
    : State(static_cast<std::uint8_t>(GameTag::kWeightedRps)) {}

PlayerId WeightedRpsState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!IsTerminal(), "terminal state has no player");
  return PlayerId::Agent(StepIndex());
}

InfostateKey WeightedRpsState::Infostate(PlayerId player) const {
  ABCS_CHECK(!IsTerminal() && player == CurrentPlayer());
  // Neither agent has observed anything when it moves.
  InfostateKey key;
  key.player = player.agent();
  key.bytes.push_back(static_cast<char>(GameTag::kWeightedRps));
  key.bytes.push_back(static_cast<char>(key.player));
  return key;
}

Reward WeightedRpsState::ApplyInPlace(Action /*action*/) {
  if (!IsTerminal()) return Reward{};
  double u0 = wrps::Payoff(History()[0], History()[1]);
  return Reward{u0, -u0};
}

}  // namespace abcs
