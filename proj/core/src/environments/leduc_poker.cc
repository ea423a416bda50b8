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

#include "abcs/environments/leduc_poker.h"

#include "abcs/environments/tags.h"

namespace abcs {

namespace {
constexpr char kRankNames[] = {'J', 'Q', 'K'};
int Rank(int card) { return card / 2; }
}  // namespace

LeducState::LeducState()
    : State(static_cast<std::uint8_t>(GameTag::kLeduc)) {}

bool LeducState::ChanceNode() const {
  return cards_[0] < 0 || cards_[1] < 0 || (round_ == 1 && board_ < 0);
}

PlayerId LeducState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!terminal_, "terminal state has no player");
  if (ChanceNode()) return PlayerId::Chance();
  return PlayerId::Agent(player_);
}

int LeducState::NumActions() const {
  if (terminal_) return 0;
  if (ChanceNode()) {
    int used = (cards_[0] >= 0) + (cards_[1] >= 0) + (board_ >= 0);
    return leduc::kDeckSize - used;
  }
  if (!FacingBet()) return 2;
  return raises_ < leduc::kMaxRaises ? 3 : 2;
}

std::vector<double> LeducState::ChanceProbabilities() const {
  ABCS_CHECK_MSG(!terminal_ && ChanceNode(), "not a chance node");
  int n = NumActions();
  return std::vector<double>(n, 1.0 / n);
}

int LeducState::NthRemainingCard(int i) const {
  for (int c = 0; c < leduc::kDeckSize; ++c) {
    if (c == cards_[0] || c == cards_[1] || c == board_) continue;
    if (i-- == 0) return c;
  }
  ABCS_CHECK_MSG(false, "chance outcome out of range");
  return -1;
}

leduc::Move LeducState::MoveOf(Action action) const {
  ABCS_CHECK(!terminal_ && !ChanceNode());
  if (FacingBet()) {
    if (action == 0) return leduc::Move::kFold;
    return action == 1 ? leduc::Move::kCall : leduc::Move::kRaise;
  }
  return action == 0 ? leduc::Move::kCall : leduc::Move::kRaise;
}

Reward LeducState::ApplyInPlace(Action action) {
  if (ChanceNode()) {
    int card = NthRemainingCard(action);
    if (cards_[0] < 0) {
      cards_[0] = card;
    } else if (cards_[1] < 0) {
      cards_[1] = card;
    } else {
      board_ = card;
    }
    return Reward{};
  }
  // MoveOf reads the pre-action betting state, which is still intact.
  leduc::Move move = MoveOf(action);
  int me = player_;
  int other = 1 - me;
  switch (move) {
    case leduc::Move::kFold: {
      bets_[round_].push_back('f');
      terminal_ = true;
      double u = pot_[me];
      return me == 0 ? Reward{-u, u} : Reward{u, -u};
    }
    case leduc::Move::kCall:
      bets_[round_].push_back('c');
      pot_[me] = pot_[other];
      break;
    case leduc::Move::kRaise:
      bets_[round_].push_back('r');
      pot_[me] = pot_[other] + (round_ == 0 ? 2 : 4);
      ++raises_;
      break;
  }
  ++actions_in_round_;
  bool round_over = move == leduc::Move::kCall && actions_in_round_ >= 2;
  if (!round_over) {
    player_ = other;
    return Reward{};
  }
  if (round_ == 1) {
    terminal_ = true;
    return Showdown();
  }
  round_ = 1;
  player_ = 0;
  raises_ = 0;
  actions_in_round_ = 0;
  return Reward{};
}

Reward LeducState::Showdown() const {
  int board = Rank(board_);
  auto strength = [&](int agent) {
    int r = Rank(cards_[agent]);
    return r == board ? 10 + r : r;
  };
  int s0 = strength(0);
  int s1 = strength(1);
  if (s0 == s1) return Reward{0.0, 0.0};
  // Both contributions are equal after a call.
  double u = pot_[0];
  return s0 > s1 ? Reward{u, -u} : Reward{-u, u};
}

InfostateKey LeducState::Infostate(PlayerId player) const {
  ABCS_CHECK(!terminal_ && player == CurrentPlayer());
  InfostateKey key;
  key.player = player.agent();
  std::string& b = key.bytes;
  b.reserve(8 + bets_[0].size() + bets_[1].size());
  b.push_back(static_cast<char>(GameTag::kLeduc));
  b.push_back(static_cast<char>(key.player));
  b.push_back(kRankNames[Rank(cards_[key.player])]);
  b.push_back(board_ < 0 ? '-' : kRankNames[Rank(board_)]);
  b += bets_[0];
  b.push_back('/');
  b += bets_[1];
  return key;
}

std::string LeducState::ToString() const {
  std::string out;
  for (int agent = 0; agent < 2; ++agent) {
    out.push_back(cards_[agent] < 0 ? '?' : kRankNames[Rank(cards_[agent])]);
  }
  out.push_back(' ');
  out.push_back(board_ < 0 ? '-' : kRankNames[Rank(board_)]);
  out += " " + bets_[0] + "/" + bets_[1];
  return out;
}

}  // namespace abcs
