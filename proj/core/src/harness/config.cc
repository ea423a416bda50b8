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

#include "abcs/harness/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "abcs/check.h"
#include "abcs/environments/tags.h"
#include "abcs/learners/factory.h"

namespace abcs {

namespace {

std::string_view Strip(std::string_view s) {
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) return parts;
    pos = next + 1;
  }
}

[[noreturn]] void Bad(std::string_view key, std::string_view value,
                      std::string_view expected) {
  throw ConfigError(std::string(key), "bad value '" + std::string(value) +
                                          "', expected " +
                                          std::string(expected));
}

double ParseReal(std::string_view key, std::string_view value) {
  double out = 0.0;
  auto [end, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() ||
      !std::isfinite(out)) {
    Bad(key, value, "a real number");
  }
  return out;
}

std::int64_t ParseInt(std::string_view key, std::string_view value) {
  // Accept integral reals such as 1e7.
  std::int64_t out = 0;
  auto [end, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec == std::errc() && end == value.data() + value.size()) return out;
  double real = ParseReal(key, value);
  if (real != std::floor(real) || std::fabs(real) > 9e18) {
    Bad(key, value, "an integer");
  }
  return static_cast<std::int64_t>(real);
}

bool ParseBool(std::string_view key, std::string_view value) {
  std::string v = Lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  Bad(key, value, "a boolean");
}

void Require(bool ok, std::string_view key, std::string_view value,
             std::string_view expected) {
  if (!ok) Bad(key, value, expected);
}

double UnitInterval(std::string_view key, std::string_view value,
                    bool open_low, bool open_high) {
  double x = ParseReal(key, value);
  bool ok = (open_low ? x > 0 : x >= 0) && (open_high ? x < 1 : x <= 1);
  Require(ok, key, value, "a probability in range");
  return x;
}

// Splits "abcs_tau_stationary_scale" into the schedule and its field.
bool SetScheduleField(Schedule& schedule, std::string_view field,
                      std::string_view key, std::string_view value) {
  if (field == "scale") {
    schedule.scale = ParseReal(key, value);
    Require(schedule.scale > 0, key, value, "a positive real");
  } else if (field == "decay") {
    schedule.decay = ParseReal(key, value);
    Require(schedule.decay > 0 && schedule.decay <= 1, key, value,
            "a real in (0, 1]");
  } else if (field == "period") {
    schedule.period = ParseInt(key, value);
    Require(schedule.period >= 1, key, value, "a positive integer");
  } else {
    return false;
  }
  return true;
}

struct ScheduleKey {
  const char* prefix;
  Schedule LearnerConfig::*member;
};

constexpr ScheduleKey kSchedules[] = {
    {"bql_tau_", &LearnerConfig::bql_tau},
    {"cfr_tau_", &LearnerConfig::cfr_tau},
    {"abcs_tau_stationary_", &LearnerConfig::abcs_tau_stationary},
    {"abcs_tau_nonstationary_", &LearnerConfig::abcs_tau_nonstationary},
};

GameTag EnvironmentTag(const std::string& env) {
  if (env == "wrps") return GameTag::kWeightedRps;
  if (env == "kuhn") return GameTag::kKuhn;
  if (env == "leduc") return GameTag::kLeduc;
  if (env == "cartpole") return GameTag::kCartpole;
  if (env == "stacked") return GameTag::kStacked;
  return GameTag::kTicTacToe;
}

bool IsEnvironment(const std::string& name) {
  const auto& names = EnvironmentNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string Trim(std::string_view s) { return std::string(Strip(s)); }

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {
        "env",          "algo",          "seed",
        "budget_nodes", "eval_every_nodes", "eval_episodes",
        "eval_seed",    "termination_probability", "gamma"};
    for (const ScheduleKey& s : kSchedules) {
      for (const char* f : {"scale", "decay", "period"}) {
        k.push_back(std::string(s.prefix) + f);
      }
    }
    for (const char* rest :
         {"os_epsilon", "abcs_epsilon", "dual_tables", "detector",
          "significance", "check_probability", "min_samples",
          "detector_script"}) {
      k.push_back(rest);
    }
    return k;
  }();
  return keys;
}

void SetConfigValue(RunConfig& config, std::string_view raw_key,
                    std::string_view raw_value) {
  std::string key = Lower(Trim(raw_key));
  std::replace(key.begin(), key.end(), '-', '_');
  std::string value = Trim(raw_value);
  LearnerConfig& learner = config.learner;
  DetectorConfig& detector = learner.detector;

  if (key == "env") {
    std::string env = Lower(value);
    if (!IsEnvironment(env)) throw ConfigError("env", "unknown environment '" + value + "'");
    config.env = env;
  } else if (key == "algo") {
    config.algo = CanonicalAlgorithmName(value);
  } else if (key == "seed") {
    std::int64_t seed = ParseInt(key, value);
    Require(seed >= 0, key, value, "a nonnegative integer");
    config.seed = static_cast<std::uint64_t>(seed);
  } else if (key == "budget_nodes") {
    config.budget_nodes = ParseInt(key, value);
    Require(config.budget_nodes > 0, key, value, "a positive integer");
  } else if (key == "eval_every_nodes") {
    config.eval_every_nodes = ParseInt(key, value);
    Require(config.eval_every_nodes > 0, key, value, "a positive integer");
  } else if (key == "eval_episodes") {
    std::int64_t n = ParseInt(key, value);
    Require(n > 0 && n <= 100'000'000, key, value, "a positive integer");
    config.eval_episodes = static_cast<int>(n);
  } else if (key == "eval_seed") {
    std::int64_t seed = ParseInt(key, value);
    Require(seed >= 0, key, value, "a nonnegative integer");
    config.eval_seed = static_cast<std::uint64_t>(seed);
  } else if (key == "termination_probability") {
    config.env_params.termination_probability =
        UnitInterval(key, value, true, true);
  } else if (key == "gamma") {
    learner.gamma = UnitInterval(key, value, true, false);
  } else if (key == "os_epsilon") {
    learner.os_epsilon = UnitInterval(key, value, true, false);
  } else if (key == "abcs_epsilon") {
    learner.abcs_epsilon = UnitInterval(key, value, false, false);
  } else if (key == "dual_tables") {
    learner.dual_tables = ParseBool(key, value);
  } else if (key == "detector") {
    try {
      detector.mode = ParseDetectorMode(value);
    } catch (const ConfigError&) {
      throw ConfigError("detector", "unknown detector mode '" + value + "'");
    }
  } else if (key == "significance") {
    detector.significance = UnitInterval(key, value, true, true);
  } else if (key == "check_probability") {
    detector.check_probability = UnitInterval(key, value, false, false);
  } else if (key == "min_samples") {
    detector.min_samples = ParseInt(key, value);
    Require(detector.min_samples >= 2, key, value, "an integer >= 2");
  } else if (key == "detector_script") {
    config.detector_script.clear();
    for (std::string_view part : Split(value, ',')) {
      if (Strip(part).empty()) continue;
      std::string env = Lower(Strip(part));
      Require(IsEnvironment(env), key, value, "environment names");
      config.detector_script.push_back(env);
    }
  } else {
    bool matched = false;
    for (const ScheduleKey& s : kSchedules) {
      std::string_view prefix = s.prefix;
      if (key.size() > prefix.size() && key.starts_with(prefix)) {
        matched = SetScheduleField(learner.*(s.member),
                                   std::string_view(key).substr(prefix.size()),
                                   key, value);
        if (matched) break;
      }
    }
    if (!matched) throw ConfigError(key, "unknown configuration key");
  }
  config.explicit_keys.insert(key);
}

void ParseConfigInto(std::string_view text, RunConfig& config) {
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string_view key =
        Strip(line.substr(0, std::min(eq, line.size())));
    if (eq == std::string_view::npos || key.empty()) {
      throw ConfigError(key.empty() ? "line " + std::to_string(line_number)
                                    : std::string(key),
                        "malformed line " + std::to_string(line_number) +
                            ", expected 'key = value'");
    }
    SetConfigValue(config, key, line.substr(eq + 1));
  }
}

std::int64_t DefaultBudget(const std::string& env) {
  if (env == "wrps") return 1'000'000;
  if (env == "kuhn") return 10'000'000;
  if (env == "leduc") return 50'000'000;
  if (env == "cartpole") return 10'000'000;
  if (env == "stacked") return 100'000'000;
  if (env == "tictactoe") return 50'000'000;
  throw ConfigError("env", "unknown environment '" + env + "'");
}

void ResolveDefaults(RunConfig& config) {
  if (config.env.empty()) throw ConfigError("env", "missing");
  if (config.algo.empty()) throw ConfigError("algo", "missing");
  config.algo = CanonicalAlgorithmName(config.algo);
  auto is_set = [&](const std::string& key) {
    return config.explicit_keys.count(key) > 0;
  };
  if (!is_set("budget_nodes")) config.budget_nodes = DefaultBudget(config.env);
  if (!is_set("eval_every_nodes")) {
    config.eval_every_nodes = std::max<std::int64_t>(1, config.budget_nodes / 50);
  }
  if (config.env == "tictactoe") {
    Schedule& stationary = config.learner.abcs_tau_stationary;
    if (!is_set("abcs_tau_stationary_scale")) stationary.scale = 10.0;
    if (!is_set("abcs_tau_stationary_period")) stationary.period = 50;
    if (!is_set("bql_tau_period")) config.learner.bql_tau.period = 100;
  }
  if (config.learner.detector.mode == DetectorMode::kScripted) {
    std::vector<std::uint8_t> tags;
    for (const std::string& env : config.detector_script) {
      tags.push_back(static_cast<std::uint8_t>(EnvironmentTag(env)));
    }
    config.learner.detector.script = [tags](const InfostateKey& key, Action) {
      return !key.bytes.empty() &&
             std::find(tags.begin(), tags.end(),
                       static_cast<std::uint8_t>(key.bytes[0])) != tags.end();
    };
  }
  if (config.budget_nodes <= 0) {
    throw ConfigError("budget_nodes", "must be positive");
  }
  if (config.eval_every_nodes <= 0) {
    throw ConfigError("eval_every_nodes", "must be positive");
  }
}

RunConfig ParseConfig(std::string_view text) {
  RunConfig config;
  ParseConfigInto(text, config);
  ResolveDefaults(config);
  return config;
}

std::string FormatConfig(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  const LearnerConfig& l = c.learner;
  auto schedule = [&](const char* prefix, const Schedule& s) {
    out << prefix << "scale = " << s.scale << "\n"
        << prefix << "decay = " << s.decay << "\n"
        << prefix << "period = " << s.period << "\n";
  };
  out << "env = " << c.env << "\n"
      << "algo = " << c.algo << "\n"
      << "seed = " << c.seed << "\n"
      << "budget_nodes = " << c.budget_nodes << "\n"
      << "eval_every_nodes = " << c.eval_every_nodes << "\n"
      << "eval_episodes = " << c.eval_episodes << "\n"
      << "eval_seed = " << c.eval_seed.value_or(c.seed) << "\n";
  if (c.env_params.termination_probability) {
    out << "termination_probability = "
        << *c.env_params.termination_probability << "\n";
  }
  out << "gamma = " << l.gamma << "\n";
  schedule("bql_tau_", l.bql_tau);
  schedule("cfr_tau_", l.cfr_tau);
  schedule("abcs_tau_stationary_", l.abcs_tau_stationary);
  schedule("abcs_tau_nonstationary_", l.abcs_tau_nonstationary);
  out << "os_epsilon = " << l.os_epsilon << "\n"
      << "abcs_epsilon = " << l.abcs_epsilon << "\n"
      << "dual_tables = " << (l.dual_tables ? "true" : "false") << "\n"
      << "detector = " << DetectorModeName(l.detector.mode) << "\n"
      << "significance = " << l.detector.significance << "\n"
      << "check_probability = " << l.detector.check_probability << "\n"
      << "min_samples = " << l.detector.min_samples << "\n";
  if (!c.detector_script.empty()) {
    out << "detector_script = ";
    for (std::size_t i = 0; i < c.detector_script.size(); ++i) {
      out << (i ? "," : "") << c.detector_script[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace abcs
