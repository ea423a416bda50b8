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

#ifndef ABCS_DETECTOR_SAMPLE_LOG_H_
#define ABCS_DETECTOR_SAMPLE_LOG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "abcs/detector/chi_squared.h"

namespace abcs {

// Append-only record of (reward, hidden state) observations following one
// (infostate, action) pair. Rewards and hidden keys are interned to small
// categories; each distinct (reward, hidden) pair is one table column.
// Column counts for the first floor(N/2) entries and for all N entries are
// maintained incrementally, so a test costs O(columns).
class SampleLog {
 public:
  void Record(double reward, std::string_view hidden);
  void Record(double reward, std::uint32_t hidden_category);

  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  int num_reward_categories() const {
    return static_cast<int>(reward_ids_.size());
  }
  int num_hidden_categories() const {
    return static_cast<int>(hidden_ids_.size());
  }
  int num_columns() const { return static_cast<int>(column_totals_.size()); }

  // Category ids of entry i.
  std::uint32_t reward_category(std::int64_t i) const;
  std::uint32_t hidden_category(std::int64_t i) const;
  // Interns `hidden` without recording it.
  std::uint32_t HiddenCategory(std::string_view hidden);

  // Contingency rows: entries [0, N/2) and [N/2, N).
  void Rows(std::vector<std::int64_t>& first,
            std::vector<std::int64_t>& second) const;
  // Pearson test between the two halves. Requires size() >= 2.
  ChiSquaredResult Test() const;

 private:
  std::uint32_t RewardCategory(double reward);

  // Column id per entry, in observation order.
  std::vector<std::uint32_t> entries_;
  std::vector<std::uint64_t> columns_;  // column -> (reward << 32) | hidden
  absl::flat_hash_map<double, std::uint32_t> reward_ids_;
  absl::flat_hash_map<std::string, std::uint32_t> hidden_ids_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> column_ids_;
  std::vector<std::int64_t> column_first_;
  std::vector<std::int64_t> column_totals_;
  std::int64_t split_ = 0;  // entries before split_ are counted in first
};

}  // namespace abcs

#endif  // ABCS_DETECTOR_SAMPLE_LOG_H_
