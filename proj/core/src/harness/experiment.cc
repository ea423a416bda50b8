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

#include "abcs/harness/experiment.h"

#include <chrono>
#include <memory>

#include "abcs/environments/cartpole.h"
#include "abcs/environments/leduc_poker.h"
#include "abcs/environments/registry.h"
#include "abcs/environments/stacked.h"
#include "abcs/environments/tags.h"
#include "abcs/evaluation/best_response.h"
#include "abcs/evaluation/metrics.h"
#include "abcs/harness/log.h"
#include "abcs/learners/factory.h"

namespace abcs {

namespace {

bool HasTag(const InfostateKey& key, GameTag tag) {
  return !key.bytes.empty() &&
         static_cast<std::uint8_t>(key.bytes[0]) ==
             static_cast<std::uint8_t>(tag);
}

}  // namespace

std::vector<ResultRow> Evaluate(const RunConfig& config,
                                const Learner& learner) {
  std::vector<ResultRow> rows;
  auto emit = [&](const std::string& metric, double value) {
    rows.push_back({config.algo, config.env, config.seed, learner.iteration(),
                    learner.nodes_touched(), metric, value});
  };
  const Game& game = learner.game();
  const std::uint64_t eval_seed = config.eval_seed.value_or(config.seed);

  if (config.env == "cartpole") {
    const auto& cartpole = dynamic_cast<const CartpoleGame&>(game);
    double ret = MeanEpisodeReturn(game, learner.GreedyPolicy(), eval_seed,
                                   config.eval_episodes);
    emit("episode_return", ret);
    emit("regret", cartpole.OptimalReturn() - ret);
  } else if (config.env == "stacked") {
    const auto& stacked = dynamic_cast<const StackedGame&>(game);
    CartpoleGame cartpole(stacked.physics().termination_probability);
    double ret = MeanEpisodeReturn(cartpole, learner.GreedyPolicy(), eval_seed,
                                   config.eval_episodes);
    emit("cartpole_regret", cartpole.OptimalReturn() - ret);
    static const LeducGame leduc;
    emit("leduc_exploitability",
         Exploitability(leduc, learner.AveragePolicy()));
  } else if (config.env == "tictactoe") {
    emit("exploitability", Exploitability(game, learner.GreedyPolicy()));
  } else {
    emit("exploitability", Exploitability(game, learner.AveragePolicy()));
  }

  if (const Detector* detector = learner.detector()) {
    emit("nonstationary_fraction", detector->NonstationaryFraction());
    if (config.env == "stacked") {
      emit("nonstationary_fraction_cartpole",
           detector->NonstationaryFraction([](const InfostateKey& key) {
             return HasTag(key, GameTag::kCartpole);
           }));
      emit("nonstationary_fraction_leduc",
           detector->NonstationaryFraction([](const InfostateKey& key) {
             return HasTag(key, GameTag::kLeduc);
           }));
    }
  }
  return rows;
}

std::vector<ResultRow> RunExperiment(const RunConfig& config,
                                     const RowSink& sink) {
  std::shared_ptr<const Game> game =
      BuildEnvironment(config.env, config.env_params);
  std::unique_ptr<Learner> learner =
      MakeLearner(config.algo, game, config.learner, config.seed);
  ABCS_LOG("run algo=" << config.algo << " env=" << config.env
                       << " seed=" << config.seed
                       << " budget=" << config.budget_nodes);
  const auto start = std::chrono::steady_clock::now();

  std::vector<ResultRow> rows;
  std::int64_t last_eval_iteration = -1;
  auto evaluate = [&] {
    for (ResultRow& row : Evaluate(config, *learner)) {
      if (sink) sink(row);
      ABCS_LOG("  it=" << row.iteration << " nodes=" << row.nodes_touched
                       << " " << row.metric << "=" << row.value);
      rows.push_back(std::move(row));
    }
    last_eval_iteration = learner->iteration();
  };

  evaluate();
  std::int64_t next_eval = config.eval_every_nodes;
  while (learner->nodes_touched() < config.budget_nodes) {
    learner->RunIteration();
    if (learner->nodes_touched() >= next_eval) {
      evaluate();
      while (next_eval <= learner->nodes_touched()) {
        next_eval += config.eval_every_nodes;
      }
    }
  }
  if (last_eval_iteration != learner->iteration()) evaluate();

  ABCS_LOG("done in "
           << std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count()
           << "s, " << learner->iteration() << " iterations");
  return rows;
}

}  // namespace abcs
