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

#ifndef ABCS_ENVIRONMENTS_REGISTRY_H_
#define ABCS_ENVIRONMENTS_REGISTRY_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abcs/game.h"

namespace abcs {

struct EnvironmentParams {
  // Cartpole gate probability; unset means the environment's own default
  // (1/200 standalone, 1/100 stacked).
  std::optional<double> termination_probability;
};

// Names accepted by BuildEnvironment.
const std::vector<std::string>& EnvironmentNames();

// Throws ConfigError("env", ...) for an unknown name.
std::shared_ptr<const Game> BuildEnvironment(
    const std::string& name, const EnvironmentParams& params = {});

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_REGISTRY_H_
