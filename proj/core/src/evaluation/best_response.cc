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

#include "abcs/evaluation/best_response.h"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "abcs/check.h"

namespace abcs {

namespace {

struct Builder {
  std::int64_t max_nodes;
  std::vector<GameTree::Node>& nodes;
  std::vector<GameTree::Infostate>& infostates;
  absl::flat_hash_map<std::string, int> index;
  int max_depth = 0;
  std::int64_t terminals = 0;

  // Fills nodes[id] for `state` and recursively its subtree.
  void Expand(const State& state, std::int64_t id, int depth) {
    GameTree::Node& node = nodes[id];
    node.depth = depth;
    max_depth = std::max(max_depth, depth);
    if (state.IsTerminal()) {
      node.player = GameTree::kTerminal;
      ++terminals;
      return;
    }
    PlayerId player = state.CurrentPlayer();
    int n = state.NumActions();
    std::vector<double> probs;
    if (player.IsChance()) {
      node.player = GameTree::kChance;
      probs = state.ChanceProbabilities();
    } else {
      node.player = player.agent();
      InfostateKey key = state.Infostate(player);
      auto [it, inserted] =
          index.try_emplace(key.bytes, static_cast<int>(infostates.size()));
      if (inserted) {
        infostates.push_back({std::move(key), player.agent(), n, depth});
      } else {
        const GameTree::Infostate& info = infostates[it->second];
        ABCS_CHECK_MSG(info.num_actions == n && info.depth == depth,
                       "infostate spans histories of different shape");
      }
      node.infostate = it->second;
    }
    std::int64_t first = static_cast<std::int64_t>(nodes.size());
    if (first + n > max_nodes) throw std::length_error("game tree too large");
    nodes[id].first_child = first;
    nodes[id].num_children = n;
    nodes.resize(first + n);
    for (Action a = 0; a < n; ++a) {
      Transition t = state.Child(a);
      nodes[first + a].reward = t.reward;
      if (!probs.empty()) nodes[first + a].chance_probability = probs[a];
      Expand(*t.state, first + a, depth + 1);
    }
  }
};

// Action distributions for every tree infostate under `policy`.
std::vector<std::vector<double>> TabulatePolicy(const GameTree& tree,
                                                const Policy& policy) {
  std::vector<std::vector<double>> out(tree.infostates().size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const GameTree::Infostate& info = tree.infostates()[s];
    out[s].resize(info.num_actions);
    policy.ActionProbabilities(info.key, out[s]);
  }
  return out;
}

}  // namespace

GameTree::GameTree(const Game& game, std::int64_t max_nodes)
    : num_agents_(game.NumAgents()) {
  nodes_.resize(1);
  Builder builder{max_nodes, nodes_, infostates_, {}};
  builder.Expand(*game.NewInitialState(), 0, 0);
  max_depth_ = builder.max_depth;
  num_terminals_ = builder.terminals;
  nodes_.shrink_to_fit();
}

const GameTree& CachedTree(const Game& game) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<GameTree>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[game.Name()];
  if (!slot) slot = std::make_unique<GameTree>(game);
  return *slot;
}

double BestResponseValue(const GameTree& tree, const Policy& policy,
                         int responder) {
  const auto& nodes = tree.nodes();
  const auto probs = TabulatePolicy(tree, policy);
  const std::int64_t num_nodes = static_cast<std::int64_t>(nodes.size());

  // Reach of everyone but the responder; pre-order visits parents first.
  std::vector<double> reach(num_nodes, 0.0);
  reach[0] = 1.0;
  std::vector<std::vector<std::int64_t>> by_depth(tree.max_depth() + 1);
  for (std::int64_t id = 0; id < num_nodes; ++id) {
    const GameTree::Node& node = nodes[id];
    by_depth[node.depth].push_back(id);
    for (int a = 0; a < node.num_children; ++a) {
      double factor = 1.0;
      if (node.player == GameTree::kChance) {
        factor = nodes[node.first_child + a].chance_probability;
      } else if (node.player != responder) {
        factor = probs[node.infostate][a];
      }
      reach[node.first_child + a] = reach[id] * factor;
    }
  }

  std::vector<double> value(num_nodes, 0.0);
  std::vector<std::vector<double>> scores(tree.infostates().size());
  std::vector<int> best(tree.infostates().size(), 0);
  auto edge = [&](const GameTree::Node& node, int a) {
    std::int64_t c = node.first_child + a;
    return nodes[c].reward[responder] + value[c];
  };
  for (int d = tree.max_depth(); d >= 0; --d) {
    // Pick responder actions at this depth from reach-weighted scores.
    std::vector<int> touched;
    for (std::int64_t id : by_depth[d]) {
      const GameTree::Node& node = nodes[id];
      if (node.player != responder) continue;
      auto& score = scores[node.infostate];
      if (score.empty()) {
        score.assign(node.num_children, 0.0);
        touched.push_back(node.infostate);
      }
      for (int a = 0; a < node.num_children; ++a) {
        score[a] += reach[id] * edge(node, a);
      }
    }
    for (int s : touched) {
      const auto& score = scores[s];
      int b = 0;
      for (int a = 1; a < static_cast<int>(score.size()); ++a) {
        if (score[a] > score[b]) b = a;
      }
      best[s] = b;
    }
    for (std::int64_t id : by_depth[d]) {
      const GameTree::Node& node = nodes[id];
      if (node.player == GameTree::kTerminal) continue;
      double v = 0.0;
      if (node.player == responder) {
        v = edge(node, best[node.infostate]);
      } else {
        for (int a = 0; a < node.num_children; ++a) {
          double p = node.player == GameTree::kChance
                         ? nodes[node.first_child + a].chance_probability
                         : probs[node.infostate][a];
          if (p != 0.0) v += p * edge(node, a);
        }
      }
      value[id] = v;
    }
  }
  return value[0];
}

std::array<double, kMaxAgents> ExpectedReturns(const GameTree& tree,
                                               const Policy& policy) {
  const auto& nodes = tree.nodes();
  const auto probs = TabulatePolicy(tree, policy);
  std::vector<double> reach(nodes.size(), 0.0);
  reach[0] = 1.0;
  std::array<double, kMaxAgents> out{};
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const GameTree::Node& node = nodes[id];
    for (int i = 0; i < kMaxAgents; ++i) out[i] += reach[id] * node.reward[i];
    for (int a = 0; a < node.num_children; ++a) {
      double p = node.player == GameTree::kChance
                     ? nodes[node.first_child + a].chance_probability
                     : probs[node.infostate][a];
      reach[node.first_child + a] = reach[id] * p;
    }
  }
  return out;
}

double Exploitability(const Game& game, const GameTree& tree,
                      const Policy& policy) {
  ABCS_CHECK_MSG(game.NumAgents() == 2 && game.ZeroSum(),
                 "exploitability needs a two-player zero-sum game");
  return BestResponseValue(tree, policy, 0) +
         BestResponseValue(tree, policy, 1);
}

double Exploitability(const Game& game, const Policy& policy) {
  // Checked before building a tree that may not be finite.
  ABCS_CHECK_MSG(game.NumAgents() == 2 && game.ZeroSum(),
                 "exploitability needs a two-player zero-sum game");
  return Exploitability(game, CachedTree(game), policy);
}

}  // namespace abcs
