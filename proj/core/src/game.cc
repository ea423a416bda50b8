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

#include "abcs/game.h"

#include <sstream>

namespace abcs {

void AppendVarint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

std::vector<Action> State::LegalActions() const {
  std::vector<Action> actions(NumActions());
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) actions[i] = i;
  return actions;
}

std::vector<double> State::ChanceProbabilities() const {
  ABCS_CHECK_MSG(false, "no chance node here");
  return {};
}

std::vector<std::pair<Action, double>> State::ChanceOutcomes() const {
  ABCS_CHECK_MSG(!IsTerminal() && CurrentPlayer().IsChance(),
                 "chance outcomes requested at a non-chance node");
  std::vector<double> probs = ChanceProbabilities();
  std::vector<std::pair<Action, double>> out;
  out.reserve(probs.size());
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    out.emplace_back(i, probs[i]);
  }
  return out;
}

Transition State::Child(Action action) const {
  ABCS_CHECK_MSG(!IsTerminal(), "action applied to a terminal state");
  ABCS_CHECK_MSG(action >= 0 && action < NumActions(),
                 "illegal action " << action);
  Transition t;
  t.state = Clone();
  t.state->history_.push_back(action);
  t.reward = t.state->ApplyInPlace(action);
  return t;
}

Reward State::AdvanceInPlace(Action action) {
  ABCS_CHECK_MSG(!IsTerminal(), "action applied to a terminal state");
  ABCS_CHECK_MSG(action >= 0 && action < NumActions(),
                 "illegal action " << action);
  history_.push_back(action);
  return ApplyInPlace(action);
}

std::string State::CanonicalKey() const {
  std::string key;
  key.reserve(2 + history_.size());
  key.push_back(static_cast<char>(tag_));
  AppendVarint(key, history_.size());
  for (Action a : history_) AppendVarint(key, static_cast<std::uint64_t>(a));
  return key;
}

std::string State::ToString() const {
  std::ostringstream out;
  out << "history:";
  for (Action a : history_) out << " " << a;
  return out.str();
}

namespace {

void Walk(const State& state, double reach, const Reward& path_reward,
          const std::function<bool(const State&, double, const Reward&)>&
              visit) {
  if (!visit(state, reach, path_reward) || state.IsTerminal()) return;
  bool chance = state.CurrentPlayer().IsChance();
  std::vector<double> probs;
  if (chance) probs = state.ChanceProbabilities();
  for (Action a = 0; a < state.NumActions(); ++a) {
    Transition t = state.Child(a);
    Reward r = path_reward;
    for (int i = 0; i < kMaxAgents; ++i) r[i] += t.reward[i];
    Walk(*t.state, chance ? reach * probs[a] : reach, r, visit);
  }
}

}  // namespace

void WalkTree(const Game& game,
              const std::function<bool(const State&, double, const Reward&)>&
                  visit) {
  auto root = game.NewInitialState();
  Walk(*root, 1.0, Reward{}, visit);
}

}  // namespace abcs
