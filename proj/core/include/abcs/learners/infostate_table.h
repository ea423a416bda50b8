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

#ifndef ABCS_LEARNERS_INFOSTATE_TABLE_H_
#define ABCS_LEARNERS_INFOSTATE_TABLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "abcs/game.h"

namespace abcs {

struct InfostateRow {
  int num_actions = 0;
  std::int64_t offset = 0;
  std::int64_t visits = 0;  // CNT(s)
  std::int64_t frozen_iteration = -1;
  std::int64_t expanded_iteration = -1;
  int detector_base = -1;
};

// Dense storage for per-infostate learner state. Missing entries read as
// zero. With `dual` set, values and pair counts come in two banks
// (0 = stationary, 1 = nonstationary); otherwise both banks alias bank 0.
class InfostateTable {
 public:
  explicit InfostateTable(bool dual = false) : dual_(dual) {}

  // Row id for `key`, inserting a zeroed row on first sight.
  int Lookup(const InfostateKey& key, int num_actions);
  // -1 when absent.
  int Find(std::string_view bytes) const;

  int size() const { return static_cast<int>(rows_.size()); }
  bool dual() const { return dual_; }

  InfostateRow& row(int id) { return rows_[id]; }
  const InfostateRow& row(int id) const { return rows_[id]; }
  const InfostateKey& key(int id) const { return keys_[id]; }

  std::span<double> values(int id, int bank = 0) {
    return Slice(values_[Bank(bank)], id);
  }
  std::span<const double> values(int id, int bank = 0) const {
    return Slice(values_[Bank(bank)], id);
  }
  std::span<std::int64_t> pair_counts(int id, int bank = 0) {
    return Slice(pair_counts_[Bank(bank)], id);
  }
  std::span<const std::int64_t> pair_counts(int id, int bank = 0) const {
    return Slice(pair_counts_[Bank(bank)], id);
  }
  std::span<double> average(int id) { return Slice(average_, id); }
  std::span<const double> average(int id) const { return Slice(average_, id); }
  std::span<double> policy(int id) { return Slice(policy_, id); }
  std::span<const double> policy(int id) const { return Slice(policy_, id); }

 private:
  int Bank(int bank) const { return dual_ ? bank : 0; }
  template <typename T>
  std::span<T> Slice(std::vector<T>& v, int id) {
    return std::span<T>(v.data() + rows_[id].offset, rows_[id].num_actions);
  }
  template <typename T>
  std::span<const T> Slice(const std::vector<T>& v, int id) const {
    return std::span<const T>(v.data() + rows_[id].offset,
                              rows_[id].num_actions);
  }

  bool dual_;
  absl::flat_hash_map<std::string, int> index_;
  std::vector<InfostateKey> keys_;
  std::vector<InfostateRow> rows_;
  std::vector<double> values_[2];
  std::vector<std::int64_t> pair_counts_[2];
  std::vector<double> average_;
  std::vector<double> policy_;
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_INFOSTATE_TABLE_H_
