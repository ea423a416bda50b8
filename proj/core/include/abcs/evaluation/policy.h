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

#ifndef ABCS_EVALUATION_POLICY_H_
#define ABCS_EVALUATION_POLICY_H_

#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "abcs/game.h"

namespace abcs {

class Policy {
 public:
  virtual ~Policy() = default;
  // Writes the action distribution at `key` into `out` (size = actions).
  virtual void ActionProbabilities(const InfostateKey& key,
                                   std::span<double> out) const = 0;
};

class UniformPolicy : public Policy {
 public:
  void ActionProbabilities(const InfostateKey& key,
                           std::span<double> out) const override;
};

// Explicit distributions by infostate. Unknown infostates play uniformly,
// or action 0 when `first_action_fallback` is set (greedy tables).
class TabularPolicy : public Policy {
 public:
  TabularPolicy() = default;
  explicit TabularPolicy(bool first_action_fallback)
      : first_action_fallback_(first_action_fallback) {}

  void Set(const InfostateKey& key, std::vector<double> probs);
  // Null when absent.
  const std::vector<double>* Get(const InfostateKey& key) const;
  int size() const { return static_cast<int>(table_.size()); }

  void ActionProbabilities(const InfostateKey& key,
                           std::span<double> out) const override;

 private:
  bool first_action_fallback_ = false;
  absl::flat_hash_map<std::string, std::vector<double>> table_;
};

}  // namespace abcs

#endif  // ABCS_EVALUATION_POLICY_H_
