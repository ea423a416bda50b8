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

#ifndef ABCS_ENVIRONMENTS_LEDUC_POKER_H_
#define ABCS_ENVIRONMENTS_LEDUC_POKER_H_

#include <array>
#include <memory>
#include <string>

#include "abcs/game.h"

namespace abcs {

// Two-suit, three-rank poker with a public board card. Ante 1, two betting
// rounds, raises of 2 then 4, at most two raises per round.
//
// Action layout at agent nodes:
//   facing a bet:     0 fold, 1 call, 2 raise (if raises remain)
//   not facing a bet: 0 check, 1 raise
// Cards are 0..5 with rank card / 2. Infostates use ranks only; the suits
// carry no information beyond card removal, which ranks already capture.
namespace leduc {
inline constexpr int kDeckSize = 6;
inline constexpr int kMaxRaises = 2;
enum class Move { kFold, kCall, kRaise };
}  // namespace leduc

class LeducState : public State {
 public:
  LeducState();

  bool IsTerminal() const override { return terminal_; }
  PlayerId CurrentPlayer() const override;
  int NumActions() const override;
  std::vector<double> ChanceProbabilities() const override;
  InfostateKey Infostate(PlayerId player) const override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<LeducState>(*this);
  }
  std::string ToString() const override;

  // Semantic meaning of `action` at this agent node.
  leduc::Move MoveOf(Action action) const;

  int round() const { return round_; }
  int private_card(int agent) const { return cards_[agent]; }
  int board_card() const { return board_; }
  int contribution(int agent) const { return pot_[agent]; }

 protected:
  Reward ApplyInPlace(Action action) override;

 private:
  bool FacingBet() const { return pot_[0] != pot_[1]; }
  bool ChanceNode() const;
  // Chance outcome i maps to the i-th card still in the deck.
  int NthRemainingCard(int i) const;
  Reward Showdown() const;

  std::array<int, 2> cards_{-1, -1};
  int board_ = -1;
  std::array<int, 2> pot_{1, 1};
  int round_ = 0;
  int player_ = 0;
  int raises_ = 0;
  int actions_in_round_ = 0;
  bool terminal_ = false;
  // Betting sequence per round as 'c'/'r'/'f' letters.
  std::array<std::string, 2> bets_;
};

class LeducGame : public Game {
 public:
  std::string Name() const override { return "leduc"; }
  int NumAgents() const override { return 2; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<LeducState>();
  }
  bool PerfectRecall() const override { return true; }
  bool ZeroSum() const override { return true; }
  int MaxActions() const override { return leduc::kDeckSize; }
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_LEDUC_POKER_H_
