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

#include "abcs/detector/detector.h"

#include "abcs/check.h"

namespace abcs {

DetectorMode ParseDetectorMode(const std::string& name) {
  if (name == "chi_squared") return DetectorMode::kChiSquared;
  if (name == "always_stationary") return DetectorMode::kAlwaysStationary;
  if (name == "always_nonstationary") {
    return DetectorMode::kAlwaysNonstationary;
  }
  if (name == "scripted") return DetectorMode::kScripted;
  throw ConfigError("detector", "unknown detector mode '" + name + "'");
}

std::string DetectorModeName(DetectorMode mode) {
  switch (mode) {
    case DetectorMode::kChiSquared:
      return "chi_squared";
    case DetectorMode::kAlwaysStationary:
      return "always_stationary";
    case DetectorMode::kAlwaysNonstationary:
      return "always_nonstationary";
    case DetectorMode::kScripted:
      return "scripted";
  }
  return "?";
}

Detector::Detector(DetectorConfig config) : config_(std::move(config)) {
  if (!(config_.significance > 0 && config_.significance < 1)) {
    throw ConfigError("significance", "must lie in (0, 1)");
  }
  if (!(config_.check_probability >= 0 && config_.check_probability <= 1)) {
    throw ConfigError("check_probability", "must lie in [0, 1]");
  }
  if (config_.min_samples < 2) {
    throw ConfigError("min_samples", "must be at least 2");
  }
}

int Detector::RegisterInfostate(const InfostateKey& key, int num_actions) {
  int base = num_pairs();
  int key_index = static_cast<int>(keys_.size());
  keys_.push_back(key);
  for (Action a = 0; a < num_actions; ++a) {
    Pair pair;
    pair.key = key_index;
    pair.action = a;
    switch (config_.mode) {
      case DetectorMode::kAlwaysNonstationary:
        pair.nonstationary = true;
        break;
      case DetectorMode::kScripted:
        pair.nonstationary = config_.script && config_.script(key, a);
        break;
      default:
        break;
    }
    pairs_.push_back(std::move(pair));
  }
  return base;
}

void Detector::Record(int pair, double reward, std::string_view hidden) {
  pairs_[pair].log.Record(reward, hidden);
}

double Detector::PValue(int pair) const {
  const SampleLog& log = pairs_[pair].log;
  if (log.size() < config_.min_samples) return 1.0;
  return log.Test().p_value;
}

bool Detector::Detect(int pair) const {
  if (config_.mode != DetectorMode::kChiSquared) {
    return pairs_[pair].nonstationary;
  }
  return PValue(pair) < config_.significance;
}

bool Detector::CachedDetect(int pair, double draw) {
  if (config_.mode != DetectorMode::kChiSquared) {
    return pairs_[pair].nonstationary;
  }
  if (draw < config_.check_probability) {
    pairs_[pair].nonstationary = Detect(pair);
  }
  return pairs_[pair].nonstationary;
}

double Detector::NonstationaryFraction(
    const std::function<bool(const InfostateKey&)>& filter) const {
  std::int64_t logged = 0;
  std::int64_t flagged = 0;
  for (const Pair& pair : pairs_) {
    if (pair.log.size() == 0) continue;
    if (filter && !filter(keys_[pair.key])) continue;
    ++logged;
    if (pair.nonstationary) ++flagged;
  }
  return logged == 0 ? 0.0 : static_cast<double>(flagged) / logged;
}

}  // namespace abcs
