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

#include "abcs/learners/infostate_table.h"

#include <sstream>

#include "abcs/check.h"
#include "abcs/learners/schedule.h"

namespace abcs {

std::string Schedule::ToString() const {
  std::ostringstream out;
  out << scale << "*" << decay << "^floor(n/" << period << ")";
  return out.str();
}

int InfostateTable::Lookup(const InfostateKey& key, int num_actions) {
  auto [it, inserted] =
      index_.try_emplace(key.bytes, static_cast<int>(rows_.size()));
  if (!inserted) {
    ABCS_CHECK_MSG(rows_[it->second].num_actions == num_actions,
                   "action count changed at an infostate");
    return it->second;
  }
  ABCS_CHECK(num_actions > 0);
  InfostateRow row;
  row.num_actions = num_actions;
  row.offset = static_cast<std::int64_t>(average_.size());
  rows_.push_back(row);
  keys_.push_back(key);
  int banks = dual_ ? 2 : 1;
  for (int b = 0; b < banks; ++b) {
    values_[b].resize(values_[b].size() + num_actions, 0.0);
    pair_counts_[b].resize(pair_counts_[b].size() + num_actions, 0);
  }
  average_.resize(average_.size() + num_actions, 0.0);
  policy_.resize(policy_.size() + num_actions, 0.0);
  return it->second;
}

int InfostateTable::Find(std::string_view bytes) const {
  auto it = index_.find(absl::string_view(bytes.data(), bytes.size()));
  return it == index_.end() ? -1 : it->second;
}

}  // namespace abcs
