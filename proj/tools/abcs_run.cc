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

// Runs one experiment (or a seed sweep) and writes the metrics as CSV.
//
//   abcs_run --env kuhn --algo abcs --seed 0 --budget-nodes 1000000 \
//       --out kuhn_abcs.csv
//   abcs_run --config runs/leduc.cfg --set significance=0.01 \
//       --sweep-seeds 0..2 --jobs 3 --out leduc_{seed}.csv

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "abcs/check.h"
#include "abcs/harness/config.h"
#include "abcs/harness/csv.h"
#include "abcs/harness/experiment.h"

namespace {

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

SeedRange ParseSeedRange(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw abcs::ConfigError("sweep_seeds", "expected 'a..b', got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    SeedRange range;
    std::string first = text.substr(0, dots);
    std::string last = text.substr(dots + 2);
    range.first = std::stoull(first, &used);
    if (used != first.size()) throw std::invalid_argument("");
    range.last = std::stoull(last, &used);
    if (used != last.size()) throw std::invalid_argument("");
    if (range.last < range.first) throw std::invalid_argument("");
    return range;
  } catch (const std::exception&) {
    throw abcs::ConfigError("sweep_seeds", "expected 'a..b' with a <= b, got '" +
                                               text + "'");
  }
}

// "r.csv" for a single run; with several seeds "{seed}" is substituted,
// or "_seed<k>" is inserted before the extension.
std::string OutputPath(const std::string& out, std::uint64_t seed,
                       bool sweep) {
  if (out == "-" || !sweep) return out;
  std::string path = out;
  if (auto pos = path.find("{seed}"); pos != std::string::npos) {
    return path.replace(pos, 6, std::to_string(seed));
  }
  auto slash = path.find_last_of('/');
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    dot = path.size();
  }
  return path.insert(dot, "_seed" + std::to_string(seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run a learning experiment and write metrics as CSV."};
  std::string env, algo, out = "-", config_path, sweep;
  std::uint64_t seed = 0;
  std::int64_t budget = 0, eval_every = 0;
  std::vector<std::string> overrides;
  int jobs = 1;
  bool print_config = false;
  app.add_option("--env", env, "Environment: wrps, kuhn, leduc, cartpole, "
                               "stacked, tictactoe");
  app.add_option("--algo", algo, "Algorithm: bql, es-mccfr, os-mccfr, "
                                 "maxcfr, bootcfr, abcs");
  auto* seed_opt = app.add_option("--seed", seed, "Random seed");
  auto* budget_opt =
      app.add_option("--budget-nodes", budget, "Nodes-touched budget");
  auto* eval_opt = app.add_option("--eval-every-nodes", eval_every,
                                  "Evaluation interval in nodes touched");
  app.add_option("--out", out, "Output CSV path ('-' for stdout)");
  app.add_option("--config", config_path, "File of 'key = value' lines")
      ->check(CLI::ExistingFile);
  app.add_option("--set", overrides, "Override one key: key=value");
  app.add_option("--sweep-seeds", sweep, "Run seeds a..b inclusive");
  app.add_option("--jobs", jobs, "Parallel runs in a sweep")
      ->check(CLI::PositiveNumber);
  app.add_flag("--print-config", print_config,
               "Print the resolved configuration and exit");
  CLI11_PARSE(app, argc, argv);

  std::vector<abcs::RunConfig> runs;
  try {
    abcs::RunConfig base;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::stringstream text;
      text << in.rdbuf();
      if (!in) throw std::runtime_error("cannot read " + config_path);
      abcs::ParseConfigInto(text.str(), base);
    }
    if (!env.empty()) abcs::SetConfigValue(base, "env", env);
    if (!algo.empty()) abcs::SetConfigValue(base, "algo", algo);
    if (*seed_opt) abcs::SetConfigValue(base, "seed", std::to_string(seed));
    if (*budget_opt) {
      abcs::SetConfigValue(base, "budget_nodes", std::to_string(budget));
    }
    if (*eval_opt) {
      abcs::SetConfigValue(base, "eval_every_nodes", std::to_string(eval_every));
    }
    for (const std::string& item : overrides) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw abcs::ConfigError(item, "--set expects key=value");
      }
      abcs::SetConfigValue(base, item.substr(0, eq), item.substr(eq + 1));
    }
    if (base.env.empty() || base.algo.empty()) {
      std::cerr << "error: " << (base.env.empty() ? "--env" : "--algo")
                << " is required\n\n"
                << app.help();
      return 2;
    }
    if (sweep.empty()) {
      runs.push_back(base);
    } else {
      SeedRange range = ParseSeedRange(sweep);
      for (std::uint64_t s = range.first; s <= range.last; ++s) {
        abcs::RunConfig run = base;
        abcs::SetConfigValue(run, "seed", std::to_string(s));
        runs.push_back(run);
      }
    }
    for (abcs::RunConfig& run : runs) abcs::ResolveDefaults(run);
  } catch (const abcs::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (print_config) {
    for (const abcs::RunConfig& run : runs) {
      std::cout << abcs::FormatConfig(run) << "\n";
    }
    return 0;
  }

  const bool is_sweep = runs.size() > 1;
  std::vector<std::vector<abcs::ResultRow>> results(runs.size());
  std::vector<std::string> errors(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < runs.size();) {
      try {
        results[i] = abcs::RunExperiment(runs[i]);
        std::string path = OutputPath(out, runs[i].seed, is_sweep);
        if (path != "-") abcs::WriteCsv(results[i], path);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  int workers = std::min<int>(jobs, static_cast<int>(runs.size()));
  for (int t = 1; t < workers; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  int status = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error (seed " << runs[i].seed << "): " << errors[i] << "\n";
      status = 1;
    }
  }
  if (out == "-" && status == 0) {
    std::vector<abcs::ResultRow> all;
    for (const auto& rows : results) all.insert(all.end(), rows.begin(), rows.end());
    abcs::WriteCsv(std::cout, all);
  }
  return status;
}
