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

#include "abcs/learners/factory.h"

#include <algorithm>

#include "abcs/learners/abcs.h"
#include "abcs/learners/bootcfr.h"
#include "abcs/learners/bql.h"
#include "abcs/learners/es_mccfr.h"
#include "abcs/learners/maxcfr.h"
#include "abcs/learners/os_mccfr.h"

namespace abcs {

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> kNames = {
      "bql", "es-mccfr", "os-mccfr", "maxcfr", "bootcfr", "abcs"};
  return kNames;
}

std::string CanonicalAlgorithmName(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(c));
  });
  if (n == "max-cfr") n = "maxcfr";
  if (n == "boot-cfr") n = "bootcfr";
  if (n == "es" || n == "esmccfr") n = "es-mccfr";
  if (n == "os" || n == "osmccfr") n = "os-mccfr";
  for (const std::string& known : AlgorithmNames()) {
    if (n == known) return n;
  }
  throw ConfigError("algo", "unknown algorithm '" + name + "'");
}

std::unique_ptr<Learner> MakeLearner(const std::string& algorithm,
                                     std::shared_ptr<const Game> game,
                                     const LearnerConfig& config,
                                     std::uint64_t seed) {
  std::string name = CanonicalAlgorithmName(algorithm);
  if (name == "bql") return std::make_unique<Bql>(game, config, seed);
  if (name == "es-mccfr") return std::make_unique<EsMccfr>(game, config, seed);
  if (name == "os-mccfr") return std::make_unique<OsMccfr>(game, config, seed);
  if (name == "maxcfr") return std::make_unique<MaxCfr>(game, config, seed);
  if (name == "bootcfr") return std::make_unique<BootCfr>(game, config, seed);
  return std::make_unique<Abcs>(game, config, seed);
}

}  // namespace abcs
