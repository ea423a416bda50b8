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

#ifndef ABCS_EVALUATION_METRICS_H_
#define ABCS_EVALUATION_METRICS_H_

#include <cstdint>

#include "abcs/evaluation/policy.h"
#include "abcs/game.h"

namespace abcs {

// Mean undiscounted return of agent 0 over `episodes` fresh episodes of a
// single-agent game. Chance and policy draws come from the evaluation
// stream of `seed`, so a fixed seed reproduces the same episodes.
double MeanEpisodeReturn(const Game& game, const Policy& policy,
                         std::uint64_t seed, int episodes);

// `optimal_return` minus the mean return.
double Regret(const Game& game, const Policy& policy, double optimal_return,
              std::uint64_t seed, int episodes);

}  // namespace abcs

#endif  // ABCS_EVALUATION_METRICS_H_
