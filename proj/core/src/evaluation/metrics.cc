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

#include "abcs/evaluation/metrics.h"

#include <vector>

#include "abcs/check.h"
#include "abcs/random.h"

namespace abcs {

double MeanEpisodeReturn(const Game& game, const Policy& policy,
                         std::uint64_t seed, int episodes) {
  ABCS_CHECK_MSG(game.NumAgents() == 1, "episode return needs one agent");
  ABCS_CHECK(episodes > 0);
  Rng rng = MakeStream(seed, Stream::kEvaluation);
  std::vector<double> probs;
  double total = 0.0;
  for (int e = 0; e < episodes; ++e) {
    std::unique_ptr<State> state = game.NewInitialState();
    while (!state->IsTerminal()) {
      PlayerId player = state->CurrentPlayer();
      Action action;
      if (player.IsChance()) {
        probs = state->ChanceProbabilities();
        action = rng.Sample(probs);
      } else {
        probs.assign(state->NumActions(), 0.0);
        policy.ActionProbabilities(state->Infostate(player), probs);
        action = rng.Sample(probs);
      }
      total += state->AdvanceInPlace(action)[0];
    }
  }
  return total / episodes;
}

double Regret(const Game& game, const Policy& policy, double optimal_return,
              std::uint64_t seed, int episodes) {
  return optimal_return - MeanEpisodeReturn(game, policy, seed, episodes);
}

}  // namespace abcs
