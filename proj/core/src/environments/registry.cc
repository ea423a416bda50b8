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

#include "abcs/environments/registry.h"

#include "abcs/environments/cartpole.h"
#include "abcs/environments/kuhn_poker.h"
#include "abcs/environments/leduc_poker.h"
#include "abcs/environments/stacked.h"
#include "abcs/environments/tic_tac_toe.h"
#include "abcs/environments/weighted_rps.h"

namespace abcs {

const std::vector<std::string>& EnvironmentNames() {
  static const std::vector<std::string> kNames = {
      "wrps", "kuhn", "leduc", "cartpole", "stacked", "tictactoe"};
  return kNames;
}

std::shared_ptr<const Game> BuildEnvironment(const std::string& name,
                                             const EnvironmentParams& params) {
  auto p = params.termination_probability;
  if (p && !(*p > 0.0 && *p < 1.0)) {
    throw ConfigError("termination_probability", "must lie in (0, 1)");
  }
  if (name == "wrps") return std::make_shared<WeightedRpsGame>();
  if (name == "kuhn") return std::make_shared<KuhnGame>();
  if (name == "leduc") return std::make_shared<LeducGame>();
  if (name == "cartpole") {
    return std::make_shared<CartpoleGame>(p.value_or(1.0 / 200.0));
  }
  if (name == "stacked") {
    return std::make_shared<StackedGame>(p.value_or(1.0 / 100.0));
  }
  if (name == "tictactoe") return std::make_shared<TicTacToeGame>();
  throw ConfigError("env", "unknown environment '" + name + "'");
}

}  // namespace abcs
