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

#ifndef ABCS_DETECTOR_DETECTOR_H_
#define ABCS_DETECTOR_DETECTOR_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "abcs/detector/sample_log.h"
#include "abcs/game.h"

namespace abcs {

enum class DetectorMode {
  kChiSquared,
  kAlwaysStationary,
  kAlwaysNonstationary,
  kScripted,
};

// Parses "chi_squared", "always_stationary", "always_nonstationary",
// "scripted". Throws ConfigError("detector", ...) otherwise.
DetectorMode ParseDetectorMode(const std::string& name);
std::string DetectorModeName(DetectorMode mode);

struct DetectorConfig {
  DetectorMode mode = DetectorMode::kChiSquared;
  double significance = 0.05;
  double check_probability = 0.05;
  std::int64_t min_samples = 8;
  // Scripted mode: flags by (infostate bytes, action); misses are stationary.
  std::function<bool(const InfostateKey&, Action)> script;
};

// Per-(infostate, action) sample logs and cached stationarity flags.
// Pairs are addressed by dense handles: RegisterInfostate reserves
// `num_actions` consecutive handles starting at the returned base.
class Detector {
 public:
  explicit Detector(DetectorConfig config);

  int RegisterInfostate(const InfostateKey& key, int num_actions);
  int num_pairs() const { return static_cast<int>(pairs_.size()); }

  void Record(int pair, double reward, std::string_view hidden);

  // Fresh test of the pair's log: true means nonstationary. Logs shorter
  // than min_samples are stationary. Oracle modes ignore the log.
  bool Detect(int pair) const;
  double PValue(int pair) const;

  // With probability check_probability (draw < check_probability) refresh
  // the cached flag from Detect; return the cached flag. Oracle modes
  // return their fixed answer.
  bool CachedDetect(int pair, double draw);

  // Cached flag without side effects (false = stationary).
  bool Flag(int pair) const { return pairs_[pair].nonstationary; }

  // Fraction of pairs with a non-empty log whose flag is nonstationary,
  // restricted to pairs whose infostate satisfies `filter` when given.
  double NonstationaryFraction(
      const std::function<bool(const InfostateKey&)>& filter = {}) const;

  const SampleLog& log(int pair) const { return pairs_[pair].log; }
  const InfostateKey& key(int pair) const { return keys_[pairs_[pair].key]; }
  Action action(int pair) const { return pairs_[pair].action; }
  const DetectorConfig& config() const { return config_; }

 private:
  struct Pair {
    SampleLog log;
    int key = 0;
    Action action = 0;
    bool nonstationary = false;
  };

  DetectorConfig config_;
  std::vector<InfostateKey> keys_;
  std::vector<Pair> pairs_;
};

}  // namespace abcs

#endif  // ABCS_DETECTOR_DETECTOR_H_
