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

#ifndef ABCS_GAME_H_
#define ABCS_GAME_H_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "abcs/check.h"

namespace abcs {

inline constexpr int kMaxAgents = 2;

// An acting entity: an agent index in [0, NumAgents) or the chance player.
class PlayerId {
 public:
  static constexpr PlayerId Agent(int index) { return PlayerId(index); }
  static constexpr PlayerId Chance() { return PlayerId(kChanceId); }

  constexpr PlayerId() : id_(kChanceId) {}

  constexpr bool IsChance() const { return id_ == kChanceId; }
  constexpr bool IsAgent() const { return id_ >= 0; }
  int agent() const {
    ABCS_CHECK_MSG(IsAgent(), "chance has no agent index");
    return id_;
  }

  constexpr bool operator==(const PlayerId&) const = default;

  std::string ToString() const {
    return IsChance() ? std::string("chance") : "agent" + std::to_string(id_);
  }

 private:
  static constexpr int kChanceId = -1;
  explicit constexpr PlayerId(int id) : id_(id) {}
  int id_;
};

// Dense per-node action index in [0, NumActions()).
using Action = int;

// Immediate per-agent reward. Single-agent games only use slot 0.
using Reward = std::array<double, kMaxAgents>;

// Identity of an information state. The bytes already encode the game tag
// and the owning player; `player` is kept for cheap access.
struct InfostateKey {
  int player = 0;
  std::string bytes;

  bool operator==(const InfostateKey& other) const {
    return player == other.player && bytes == other.bytes;
  }
  template <typename H>
  friend H AbslHashValue(H h, const InfostateKey& key) {
    return H::combine(std::move(h), key.player, key.bytes);
  }
};

// Appends `value` as an unsigned LEB128 varint.
void AppendVarint(std::string& out, std::uint64_t value);

class State;

struct Transition {
  std::unique_ptr<State> state;
  Reward reward{};
};

// An immutable history. Successors are produced by Child().
class State {
 public:
  virtual ~State() = default;

  virtual bool IsTerminal() const = 0;

  // Contract violation on terminal states.
  virtual PlayerId CurrentPlayer() const = 0;

  // Legal actions are always the dense range [0, NumActions()).
  // Terminal states report 0.
  virtual int NumActions() const = 0;
  std::vector<Action> LegalActions() const;

  // Only valid when CurrentPlayer() is chance. Outcome i is action i.
  virtual std::vector<double> ChanceProbabilities() const;
  std::vector<std::pair<Action, double>> ChanceOutcomes() const;

  // Applies `action`; the step index of the result is one larger.
  Transition Child(Action action) const;

  // In-place variant of Child(), for composite games that hold other
  // states by value.
  Reward AdvanceInPlace(Action action);

  // Infostate of `player`, who must be the acting agent.
  virtual InfostateKey Infostate(PlayerId player) const = 0;

  // Canonical hidden representation seen by the detector. Discrete games
  // use the full history; discretized games use their observation.
  virtual std::string HiddenKey() const { return CanonicalKey(); }

  // Index of the sub-game this history belongs to, for composite games.
  // Learners restart self-reach weighting when it changes.
  virtual int Segment() const { return 0; }

  // Tag byte, varint history length, varint actions.
  std::string CanonicalKey() const;

  int StepIndex() const { return static_cast<int>(history_.size()); }
  const std::vector<Action>& History() const { return history_; }

  virtual std::unique_ptr<State> Clone() const = 0;
  virtual std::string ToString() const;

 protected:
  explicit State(std::uint8_t tag) : tag_(tag) {}
  State(const State&) = default;
  State& operator=(const State&) = default;

  // Mutates a freshly cloned successor. Called with the action already
  // validated against NumActions().
  virtual Reward ApplyInPlace(Action action) = 0;

  std::uint8_t tag() const { return tag_; }

 private:
  std::uint8_t tag_;
  std::vector<Action> history_;
};

class Game {
 public:
  virtual ~Game() = default;
  virtual std::string Name() const = 0;
  virtual int NumAgents() const = 0;
  virtual std::unique_ptr<State> NewInitialState() const = 0;
  virtual bool PerfectRecall() const = 0;
  virtual bool ZeroSum() const = 0;
  virtual int MaxActions() const = 0;
};

// Depth-first walk over every reachable history. `visit` receives each
// state with its chance reach probability and the reward accumulated on
// the path; returning false prunes the subtree.
void WalkTree(const Game& game,
              const std::function<bool(const State&, double chance_reach,
                                       const Reward& path_reward)>& visit);

}  // namespace abcs

#endif  // ABCS_GAME_H_
