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

#include "abcs/evaluation/policy.h"

#include <algorithm>

#include "abcs/check.h"

namespace abcs {

void UniformPolicy::ActionProbabilities(const InfostateKey& /*key*/,
                                        std::span<double> out) const {
  for (double& p : out) p = 1.0 / static_cast<double>(out.size());
}

void TabularPolicy::Set(const InfostateKey& key, std::vector<double> probs) {
  table_[key.bytes] = std::move(probs);
}

const std::vector<double>* TabularPolicy::Get(const InfostateKey& key) const {
  auto it = table_.find(key.bytes);
  return it == table_.end() ? nullptr : &it->second;
}

void TabularPolicy::ActionProbabilities(const InfostateKey& key,
                                        std::span<double> out) const {
  const std::vector<double>* probs = Get(key);
  if (probs == nullptr) {
    if (first_action_fallback_) {
      std::fill(out.begin(), out.end(), 0.0);
      out[0] = 1.0;
    } else {
      UniformPolicy().ActionProbabilities(key, out);
    }
    return;
  }
  ABCS_CHECK_MSG(probs->size() == out.size(),
                 "policy arity mismatch at an infostate");
  std::copy(probs->begin(), probs->end(), out.begin());
}

}  // namespace abcs
