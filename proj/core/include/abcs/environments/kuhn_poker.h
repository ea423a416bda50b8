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

#ifndef ABCS_ENVIRONMENTS_KUHN_POKER_H_
#define ABCS_ENVIRONMENTS_KUHN_POKER_H_

#include <array>
#include <memory>
#include <string>

#include "abcs/game.h"

namespace abcs {

// Three-card poker, ante 1, one bet of 1. A single chance node deals the
// ordered pair of private cards. Action 0 is check/fold, action 1 is
// bet/call.
namespace kuhn {
inline constexpr int kNumDeals = 6;
// Cards dealt to (agent 0, agent 1) by chance outcome `deal`.
std::array<int, 2> DealCards(int deal);
}  // namespace kuhn

class KuhnState : public State {
 public:
  KuhnState();

  bool IsTerminal() const override;
  PlayerId CurrentPlayer() const override;
  int NumActions() const override;
  std::vector<double> ChanceProbabilities() const override;
  InfostateKey Infostate(PlayerId player) const override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<KuhnState>(*this);
  }
  std::string ToString() const override;

  int card(int agent) const { return cards_[agent]; }

 protected:
  Reward ApplyInPlace(Action action) override;

 private:
  // Betting actions only (history minus the deal).
  int NumBets() const { return StepIndex() - 1; }
  Action Bet(int i) const { return History()[i + 1]; }

  std::array<int, 2> cards_{-1, -1};
};

class KuhnGame : public Game {
 public:
  std::string Name() const override { return "kuhn"; }
  int NumAgents() const override { return 2; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<KuhnState>();
  }
  bool PerfectRecall() const override { return true; }
  bool ZeroSum() const override { return true; }
  int MaxActions() const override { return kuhn::kNumDeals; }
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_KUHN_POKER_H_
