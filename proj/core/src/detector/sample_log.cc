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

#include "abcs/detector/sample_log.h"

#include "abcs/check.h"

namespace abcs {

std::uint32_t SampleLog::RewardCategory(double reward) {
  if (reward == 0.0) reward = 0.0;  // fold -0.0 into 0.0
  auto [it, inserted] = reward_ids_.try_emplace(
      reward, static_cast<std::uint32_t>(reward_ids_.size()));
  return it->second;
}

std::uint32_t SampleLog::HiddenCategory(std::string_view hidden) {
  auto [it, inserted] = hidden_ids_.try_emplace(
      std::string(hidden), static_cast<std::uint32_t>(hidden_ids_.size()));
  return it->second;
}

void SampleLog::Record(double reward, std::string_view hidden) {
  Record(reward, HiddenCategory(hidden));
}

void SampleLog::Record(double reward, std::uint32_t hidden_category) {
  std::uint64_t joint =
      (static_cast<std::uint64_t>(RewardCategory(reward)) << 32) |
      hidden_category;
  auto [it, inserted] = column_ids_.try_emplace(
      joint, static_cast<std::uint32_t>(columns_.size()));
  if (inserted) {
    columns_.push_back(joint);
    column_first_.push_back(0);
    column_totals_.push_back(0);
  }
  std::uint32_t column = it->second;
  entries_.push_back(column);
  ++column_totals_[column];
  std::int64_t target = size() / 2;
  while (split_ < target) ++column_first_[entries_[split_++]];
}

std::uint32_t SampleLog::reward_category(std::int64_t i) const {
  return static_cast<std::uint32_t>(columns_[entries_.at(i)] >> 32);
}

std::uint32_t SampleLog::hidden_category(std::int64_t i) const {
  return static_cast<std::uint32_t>(columns_[entries_.at(i)] & 0xffffffffu);
}

void SampleLog::Rows(std::vector<std::int64_t>& first,
                     std::vector<std::int64_t>& second) const {
  first = column_first_;
  second.resize(column_totals_.size());
  for (std::size_t c = 0; c < column_totals_.size(); ++c) {
    second[c] = column_totals_[c] - column_first_[c];
  }
}

ChiSquaredResult SampleLog::Test() const {
  ABCS_CHECK_MSG(size() >= 2, "need an entry in each half");
  std::vector<std::int64_t> first;
  std::vector<std::int64_t> second;
  Rows(first, second);
  return PearsonHomogeneity(first, second);
}

}  // namespace abcs
