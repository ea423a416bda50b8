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

#ifndef ABCS_LEARNERS_FACTORY_H_
#define ABCS_LEARNERS_FACTORY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "abcs/learners/learner.h"

namespace abcs {

// Canonical algorithm names: bql, es-mccfr, os-mccfr, maxcfr, bootcfr, abcs.
const std::vector<std::string>& AlgorithmNames();

// Maps aliases (underscores, "max-cfr", ...) to the canonical name.
// Throws ConfigError("algo", ...) for unknown names.
std::string CanonicalAlgorithmName(const std::string& name);

std::unique_ptr<Learner> MakeLearner(const std::string& algorithm,
                                     std::shared_ptr<const Game> game,
                                     const LearnerConfig& config,
                                     std::uint64_t seed);

}  // namespace abcs

#endif  // ABCS_LEARNERS_FACTORY_H_
