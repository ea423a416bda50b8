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

#include "abcs/environments/kuhn_poker.h"

#include "abcs/environments/tags.h"

namespace abcs {
namespace kuhn {

std::array<int, 2> DealCards(int deal) {
  static constexpr std::array<std::array<int, 2>, kNumDeals> kDeals = {
      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  ABCS_CHECK(deal >= 0 && deal < kNumDeals);
  return kDeals[deal];
}

}  // namespace kuhn

namespace {
constexpr char kCardNames[] = {'J', 'Q', 'K'};
}  // namespace

KuhnState::KuhnState() : State(static_cast<std::uint8_t>(GameTag::kKuhn)) {}

bool KuhnState::IsTerminal() const {
  int n = StepIndex() - 1;
  if (n < 2) return false;
  if (n == 2) {
    // pass-pass, bet-pass, bet-bet end the hand; pass-bet continues.
    return !(Bet(0) == 0 && Bet(1) == 1);
  }
  return true;
}

PlayerId KuhnState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!IsTerminal(), "terminal state has no player");
  if (StepIndex() == 0) return PlayerId::Chance();
  return PlayerId::Agent(NumBets() % 2);
}

int KuhnState::NumActions() const {
  if (IsTerminal()) return 0;
  return StepIndex() == 0 ? kuhn::kNumDeals : 2;
}

std::vector<double> KuhnState::ChanceProbabilities() const {
  ABCS_CHECK_MSG(StepIndex() == 0, "not a chance node");
  return std::vector<double>(kuhn::kNumDeals, 1.0 / kuhn::kNumDeals);
}

InfostateKey KuhnState::Infostate(PlayerId player) const {
  ABCS_CHECK(!IsTerminal() && player == CurrentPlayer());
  InfostateKey key;
  key.player = player.agent();
  key.bytes.reserve(3 + NumBets());
  key.bytes.push_back(static_cast<char>(GameTag::kKuhn));
  key.bytes.push_back(static_cast<char>(key.player));
  key.bytes.push_back(kCardNames[cards_[key.player]]);
  for (int i = 0; i < NumBets(); ++i) key.bytes.push_back(Bet(i) ? 'b' : 'p');
  return key;
}

Reward KuhnState::ApplyInPlace(Action action) {
  if (StepIndex() == 1) {
    cards_ = kuhn::DealCards(action);
    return Reward{};
  }
  if (!IsTerminal()) return Reward{};
  int n = NumBets();
  double u0;
  if (n == 2 && Bet(0) == 1 && Bet(1) == 0) {
    u0 = 1.0;  // agent 1 folds to the bet
  } else if (n == 3 && Bet(2) == 0) {
    u0 = -1.0;  // agent 0 folds to the bet
  } else {
    bool any_bet = (n == 2 && Bet(0) == 1) || n == 3;
    double stake = any_bet ? 2.0 : 1.0;
    u0 = cards_[0] > cards_[1] ? stake : -stake;
  }
  return Reward{u0, -u0};
}

std::string KuhnState::ToString() const {
  std::string out;
  if (StepIndex() == 0) return "deal";
  out.push_back(kCardNames[cards_[0]]);
  out.push_back(kCardNames[cards_[1]]);
  out.push_back(' ');
  for (int i = 0; i < NumBets(); ++i) out.push_back(Bet(i) ? 'b' : 'p');
  return out;
}

}  // namespace abcs
