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

#ifndef ABCS_EVALUATION_BEST_RESPONSE_H_
#define ABCS_EVALUATION_BEST_RESPONSE_H_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "abcs/evaluation/policy.h"
#include "abcs/game.h"

namespace abcs {

// The full game tree, stored in pre-order with contiguous children.
// Agent nodes refer to an interned infostate. Every history sharing an
// infostate must sit at the same depth.
class GameTree {
 public:
  static constexpr int kChance = -1;
  static constexpr int kTerminal = -2;

  struct Node {
    int player = kTerminal;
    int infostate = -1;
    int depth = 0;
    std::int64_t first_child = 0;
    int num_children = 0;
    double chance_probability = 1.0;  // of the edge into this node
    Reward reward{};                  // on the edge into this node
  };

  struct Infostate {
    InfostateKey key;
    int player = 0;
    int num_actions = 0;
    int depth = 0;
  };

  // Throws std::length_error beyond `max_nodes`.
  explicit GameTree(const Game& game, std::int64_t max_nodes = 50'000'000);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Infostate>& infostates() const { return infostates_; }
  int num_agents() const { return num_agents_; }
  int max_depth() const { return max_depth_; }
  std::int64_t num_terminals() const { return num_terminals_; }

 private:
  int num_agents_;
  int max_depth_ = 0;
  std::int64_t num_terminals_ = 0;
  std::vector<Node> nodes_;
  std::vector<Infostate> infostates_;
};

// Process-wide cache, keyed by game name.
const GameTree& CachedTree(const Game& game);

// Value of the best response of `responder` against `policy` (the
// responder's own entries are ignored). Unreached infostates pick the
// lowest action index.
double BestResponseValue(const GameTree& tree, const Policy& policy,
                         int responder);

// Expected per-agent return when everyone follows `policy`.
std::array<double, kMaxAgents> ExpectedReturns(const GameTree& tree,
                                               const Policy& policy);

// Sum over agents of the best-response value. Two-player zero-sum only.
double Exploitability(const Game& game, const GameTree& tree,
                      const Policy& policy);
double Exploitability(const Game& game, const Policy& policy);

}  // namespace abcs

#endif  // ABCS_EVALUATION_BEST_RESPONSE_H_
