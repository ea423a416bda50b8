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

#ifndef ABCS_HARNESS_CONFIG_H_
#define ABCS_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "abcs/environments/registry.h"
#include "abcs/learners/learner.h"

namespace abcs {

struct RunConfig {
  std::string env;
  EnvironmentParams env_params;
  std::string algo;
  std::uint64_t seed = 0;
  std::int64_t budget_nodes = 0;      // 0 until resolved
  std::int64_t eval_every_nodes = 0;  // 0 until resolved
  int eval_episodes = 1000;
  // Seed of the evaluation rollouts; the run seed when unset.
  std::optional<std::uint64_t> eval_seed;
  // Environment names whose pairs a scripted detector flags nonstationary.
  std::vector<std::string> detector_script;
  LearnerConfig learner;
  // Keys assigned explicitly; environment defaults never override these.
  std::set<std::string> explicit_keys;
};

// Every accepted key, in documentation order.
const std::vector<std::string>& ConfigKeys();

// Assigns one key. Dashes in `key` are read as underscores. Throws
// ConfigError naming the key for unknown keys or bad values.
void SetConfigValue(RunConfig& config, std::string_view key,
                    std::string_view value);

// Applies `key = value` lines ('#' starts a comment) on top of `config`.
void ParseConfigInto(std::string_view text, RunConfig& config);

// Fills environment-dependent defaults (budgets, TicTacToe temperature
// schedules), canonicalizes the algorithm name and validates.
void ResolveDefaults(RunConfig& config);

// ParseConfigInto on a default RunConfig, then ResolveDefaults.
RunConfig ParseConfig(std::string_view text);

// Default node budget for an environment.
std::int64_t DefaultBudget(const std::string& env);

// One `key = value` line per key, resolved values.
std::string FormatConfig(const RunConfig& config);

}  // namespace abcs

#endif  // ABCS_HARNESS_CONFIG_H_
