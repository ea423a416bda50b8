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

#ifndef ABCS_ENVIRONMENTS_TIC_TAC_TOE_H_
#define ABCS_ENVIRONMENTS_TIC_TAC_TOE_H_

#include <array>
#include <memory>
#include <string>

#include "abcs/game.h"

namespace abcs {

// Noughts and crosses. Agent 0 plays X. Action i places a mark on the i-th
// empty cell in row-major order. Infostates are keyed by the board alone.
class TicTacToeState : public State {
 public:
  TicTacToeState();

  bool IsTerminal() const override { return winner_ >= 0 || filled_ == 9; }
  PlayerId CurrentPlayer() const override;
  int NumActions() const override { return IsTerminal() ? 0 : 9 - filled_; }
  InfostateKey Infostate(PlayerId player) const override;
  // The board is a Markov state; transpositions share a hidden key.
  std::string HiddenKey() const override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<TicTacToeState>(*this);
  }
  std::string ToString() const override;

  // Board cell of the action-th empty cell.
  int CellOf(Action action) const;
  // 0 for X, 1 for O, -1 for empty.
  int cell(int i) const { return board_[i]; }
  // -1 if nobody has won.
  int winner() const { return winner_; }

 protected:
  Reward ApplyInPlace(Action action) override;

 private:
  std::string BoardBytes() const;

  std::array<int, 9> board_;
  int filled_ = 0;
  int winner_ = -1;
};

class TicTacToeGame : public Game {
 public:
  std::string Name() const override { return "tictactoe"; }
  int NumAgents() const override { return 2; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<TicTacToeState>();
  }
  bool PerfectRecall() const override { return false; }
  bool ZeroSum() const override { return true; }
  int MaxActions() const override { return 9; }
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_TIC_TAC_TOE_H_
