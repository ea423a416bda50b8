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

#include "abcs/environments/tic_tac_toe.h"

#include "abcs/environments/tags.h"

namespace abcs {

namespace {
constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
}  // namespace

TicTacToeState::TicTacToeState()
    : State(static_cast<std::uint8_t>(GameTag::kTicTacToe)) {
  board_.fill(-1);
}

PlayerId TicTacToeState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!IsTerminal(), "terminal state has no player");
  return PlayerId::Agent(filled_ % 2);
}

int TicTacToeState::CellOf(Action action) const {
  for (int i = 0; i < 9; ++i) {
    if (board_[i] < 0 && action-- == 0) return i;
  }
  ABCS_CHECK_MSG(false, "no such empty cell");
  return -1;
}

std::string TicTacToeState::BoardBytes() const {
  std::string b(9, '.');
  for (int i = 0; i < 9; ++i) {
    if (board_[i] >= 0) b[i] = board_[i] == 0 ? 'x' : 'o';
  }
  return b;
}

InfostateKey TicTacToeState::Infostate(PlayerId player) const {
  ABCS_CHECK(!IsTerminal() && player == CurrentPlayer());
  InfostateKey key;
  key.player = player.agent();
  key.bytes.push_back(static_cast<char>(GameTag::kTicTacToe));
  key.bytes.push_back(static_cast<char>(key.player));
  key.bytes += BoardBytes();
  return key;
}

std::string TicTacToeState::HiddenKey() const {
  return std::string(1, static_cast<char>(GameTag::kTicTacToe)) + BoardBytes();
}

Reward TicTacToeState::ApplyInPlace(Action action) {
  int me = filled_ % 2;
  board_[CellOf(action)] = me;
  ++filled_;
  for (const auto& line : kLines) {
    if (board_[line[0]] == me && board_[line[1]] == me &&
        board_[line[2]] == me) {
      winner_ = me;
      return me == 0 ? Reward{1.0, -1.0} : Reward{-1.0, 1.0};
    }
  }
  return Reward{};
}

std::string TicTacToeState::ToString() const { return BoardBytes(); }

}  // namespace abcs
