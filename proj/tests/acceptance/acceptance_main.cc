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

// End-to-end acceptance checks. Each criterion prints one line:
//   PASS <name> (<seconds>s): <details>
//   FAIL <name> (<seconds>s): <details>
// Usage: abcs_acceptance [--list] [criterion ...]; no names runs all.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "abcs/detector/chi_squared.h"
#include "abcs/detector/detector.h"
#include "abcs/environments/kuhn_poker.h"
#include "abcs/environments/registry.h"
#include "abcs/game.h"
#include "abcs/evaluation/best_response.h"
#include "abcs/harness/config.h"
#include "abcs/harness/experiment.h"
#include "abcs/learners/abcs.h"
#include "abcs/learners/factory.h"
#include "abcs/random.h"
#include "oracles/chi_squared_reference.h"
#include "oracles/kuhn_oracle.h"

namespace abcs {
namespace {

// Tolerances and thresholds.
constexpr double kRealTolerance = 1e-9;
constexpr double kWrpsTarget = 0.02;
constexpr double kBqlFloor = 0.1;
constexpr double kKuhnTarget = 0.05;
constexpr double kCartpoleBqlTarget = 50.0;
constexpr double kCartpoleAbcsFactor = 2.0;
constexpr double kCartpoleOsFloor = 100.0;
constexpr double kStackedCartpoleTarget = 50.0;
constexpr double kTypeOneLow = 0.03;
constexpr double kTypeOneHigh = 0.07;
constexpr double kPowerTarget = 0.99;
constexpr double kKuhnValue = -1.0 / 18.0;
constexpr double kKuhnValueTolerance = 1e-3;
constexpr int kEquivalenceIterations = 1000;
constexpr int kDetectorTrials = 1000;
constexpr int kDetectorLogLength = 10000;
constexpr std::array<std::uint64_t, 3> kSeeds = {0, 1, 2};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string Join(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += Fmt(v[i]);
  }
  return out + "]";
}

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

RunConfig MakeRun(const std::string& env, const std::string& algo,
                  std::uint64_t seed,
                  const std::vector<std::pair<std::string, std::string>>&
                      extra = {}) {
  RunConfig c;
  SetConfigValue(c, "env", env);
  SetConfigValue(c, "algo", algo);
  SetConfigValue(c, "seed", std::to_string(seed));
  for (const auto& [k, v] : extra) SetConfigValue(c, k, v);
  ResolveDefaults(c);
  return c;
}

// Runs configs on a small thread pool; results keep input order.
std::vector<std::vector<ResultRow>> RunAll(const std::vector<RunConfig>& runs) {
  std::vector<std::vector<ResultRow>> out(runs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, runs.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < runs.size();) {
        out[i] = RunExperiment(runs[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

double Final(const std::vector<ResultRow>& rows, const std::string& metric) {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->metric == metric) return it->value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double Minimum(const std::vector<ResultRow>& rows, const std::string& metric) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (r.metric == metric) m = std::min(m, r.value);
  }
  return m;
}

// Per-seed final values of `metric` for (env, algo).
struct Series {
  std::vector<double> final;
  std::vector<double> minimum;
};

std::map<std::string, Series> RunAlgorithms(
    const std::string& env, const std::vector<std::string>& algos,
    const std::string& metric,
    const std::vector<std::pair<std::string, std::string>>& extra = {}) {
  std::vector<RunConfig> runs;
  for (const auto& algo : algos) {
    for (auto seed : kSeeds) runs.push_back(MakeRun(env, algo, seed, extra));
  }
  auto results = RunAll(runs);
  std::map<std::string, Series> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    Series& s = out[runs[i].algo];
    s.final.push_back(Final(results[i], metric));
    s.minimum.push_back(Minimum(results[i], metric));
  }
  return out;
}

bool AllBelow(const std::vector<double>& v, double t) {
  return std::all_of(v.begin(), v.end(), [t](double x) { return x < t; });
}
bool AllAbove(const std::vector<double>& v, double t) {
  return std::all_of(v.begin(), v.end(), [t](double x) { return x > t; });
}
bool NoneBelow(const std::vector<double>& v, double t) {
  return std::all_of(v.begin(), v.end(), [t](double x) { return x >= t; });
}

// Compares two learners' tables after the same number of iterations.
// Discrete state must match exactly; `max_rel` reports the largest
// relative difference of the Q values.
struct TableDiff {
  bool discrete_equal = true;
  double max_rel = 0.0;
  int rows = 0;
};

TableDiff Compare(const Learner& a, const Learner& b) {
  TableDiff d;
  const InfostateTable& ta = a.table();
  const InfostateTable& tb = b.table();
  d.rows = ta.size();
  if (ta.size() != tb.size() || a.nodes_touched() != b.nodes_touched()) {
    d.discrete_equal = false;
    return d;
  }
  for (int row = 0; row < ta.size(); ++row) {
    if (!(ta.key(row) == tb.key(row)) ||
        ta.row(row).visits != tb.row(row).visits) {
      d.discrete_equal = false;
      return d;
    }
    for (int x = 0; x < ta.row(row).num_actions; ++x) {
      if (ta.pair_counts(row)[x] != tb.pair_counts(row)[x]) {
        d.discrete_equal = false;
      }
      double qa = a.Value(row, x), qb = b.Value(row, x);
      double rel = std::abs(qa - qb) / std::max(1.0, std::abs(qa));
      d.max_rel = std::max(d.max_rel, rel);
    }
  }
  return d;
}

Outcome BootCfrEquivalence() {
  auto game = BuildEnvironment("kuhn");
  auto es = MakeLearner("es-mccfr", game, {}, 0);
  auto boot = MakeLearner("bootcfr", game, {}, 0);
  double worst = 0.0;
  bool discrete = true;
  for (int it = 0; it < kEquivalenceIterations; ++it) {
    es->RunIteration();
    boot->RunIteration();
    TableDiff d = Compare(*es, *boot);
    discrete = discrete && d.discrete_equal;
    worst = std::max(worst, d.max_rel);
  }
  Outcome o;
  o.pass = discrete && worst <= kRealTolerance;
  o.detail = std::to_string(kEquivalenceIterations) +
             " Kuhn iterations, counts/visits/nodes identical=" +
             (discrete ? "yes" : "no") + ", max relative Q difference " +
             Fmt(worst) + " (tolerance " + Fmt(kRealTolerance) + ")";
  return o;
}

Outcome AbcsReducesToMaxCfr() {
  auto game = BuildEnvironment("kuhn");
  LearnerConfig config;
  config.detector.mode = DetectorMode::kAlwaysNonstationary;
  config.abcs_epsilon = 0.0;
  auto abcs = MakeLearner("abcs", game, config, 0);
  auto max = MakeLearner("maxcfr", game, config, 0);
  double worst = 0.0;
  bool discrete = true;
  for (int it = 0; it < kEquivalenceIterations; ++it) {
    abcs->RunIteration();
    max->RunIteration();
    TableDiff d = Compare(*abcs, *max);
    discrete = discrete && d.discrete_equal;
    worst = std::max(worst, d.max_rel);
  }
  Outcome o;
  o.pass = discrete && worst == 0.0;
  o.detail = std::to_string(kEquivalenceIterations) +
             " Kuhn iterations, counts identical=" + (discrete ? "yes" : "no") +
             ", max Q difference " + Fmt(worst) + " (exact)";
  return o;
}

Outcome WeightedRps() {
  auto s = RunAlgorithms("wrps", {"es-mccfr", "maxcfr", "abcs", "bql"},
                         "exploitability");
  Outcome o;
  for (const char* algo : {"es-mccfr", "maxcfr", "abcs"}) {
    bool ok = AllBelow(s[algo].final, kWrpsTarget);
    o.pass = o.pass && ok;
    o.detail += std::string(algo) + " " + Join(s[algo].final) + " < " +
                Fmt(kWrpsTarget) + "; ";
  }
  bool bql = AllAbove(s["bql"].minimum, kBqlFloor);
  o.pass = o.pass && bql;
  o.detail += "bql min over run " + Join(s["bql"].minimum) + " > " +
              Fmt(kBqlFloor) + " (budget 1e6 nodes)";
  return o;
}

Outcome Kuhn() {
  auto s = RunAlgorithms("kuhn", {"es-mccfr", "abcs", "bql"}, "exploitability");
  Outcome o;
  for (const char* algo : {"es-mccfr", "abcs"}) {
    bool ok = AllBelow(s[algo].final, kKuhnTarget);
    o.pass = o.pass && ok;
    o.detail += std::string(algo) + " " + Join(s[algo].final) + " < " +
                Fmt(kKuhnTarget) + "; ";
  }
  bool bql = NoneBelow(s["bql"].minimum, kBqlFloor);
  o.pass = o.pass && bql;
  o.detail += "bql (tau 10*0.99^(n/50)) min over run " +
              Join(s["bql"].minimum) + " >= " + Fmt(kBqlFloor) +
              " (budget 1e7 nodes)";
  return o;
}

Outcome Cartpole() {
  auto s = RunAlgorithms("cartpole", {"bql", "abcs", "os-mccfr"}, "regret");
  double bql = Mean(s["bql"].final);
  double abcs = Mean(s["abcs"].final);
  double os = Mean(s["os-mccfr"].final);
  Outcome o;
  bool bql_ok = bql < kCartpoleBqlTarget;
  bool abcs_ok = abcs <= kCartpoleAbcsFactor * bql;
  bool os_ok = os > kCartpoleOsFloor;
  o.pass = bql_ok && abcs_ok && os_ok;
  o.detail = "mean regret at 1e7 nodes: bql " + Fmt(bql) + " " +
             Join(s["bql"].final) + " < " + Fmt(kCartpoleBqlTarget) + " [" +
             (bql_ok ? "ok" : "MISS") + "]; abcs " + Fmt(abcs) + " " +
             Join(s["abcs"].final) + " <= 2 x bql [" +
             (abcs_ok ? "ok" : "MISS") + "]; os-mccfr " + Fmt(os) + " " +
             Join(s["os-mccfr"].final) + " > " + Fmt(kCartpoleOsFloor) + " [" +
             (os_ok ? "ok" : "MISS") + "]";
  return o;
}

Outcome Stacked() {
  // Only the final evaluation matters here.
  std::vector<std::pair<std::string, std::string>> extra = {
      {"eval_every_nodes", "100000000"}};
  std::vector<RunConfig> runs;
  const std::vector<std::string> algos = {"abcs", "bql", "maxcfr"};
  for (const auto& algo : algos) {
    for (auto seed : kSeeds) runs.push_back(MakeRun("stacked", algo, seed, extra));
  }
  auto results = RunAll(runs);
  std::map<std::string, std::vector<double>> regret, leduc;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    regret[runs[i].algo].push_back(Final(results[i], "cartpole_regret"));
    leduc[runs[i].algo].push_back(Final(results[i], "leduc_exploitability"));
  }
  double abcs_regret = Mean(regret["abcs"]);
  double abcs_leduc = Mean(leduc["abcs"]);
  double bql_leduc = Mean(leduc["bql"]);
  double max_leduc = Mean(leduc["maxcfr"]);
  bool regret_ok = abcs_regret < kStackedCartpoleTarget;
  bool bql_ok = abcs_leduc < bql_leduc;
  bool max_ok = abcs_leduc < max_leduc;
  Outcome o;
  o.pass = regret_ok && bql_ok && max_ok;
  o.detail = "means at 1e8 nodes: abcs cartpole regret " + Fmt(abcs_regret) +
             " " + Join(regret["abcs"]) + " < " +
             Fmt(kStackedCartpoleTarget) + " [" + (regret_ok ? "ok" : "MISS") +
             "]; leduc exploitability abcs " + Fmt(abcs_leduc) + " " +
             Join(leduc["abcs"]) + " < bql " + Fmt(bql_leduc) + " " +
             Join(leduc["bql"]) + " [" + (bql_ok ? "ok" : "MISS") +
             "] and < maxcfr " + Fmt(max_leduc) + " " + Join(leduc["maxcfr"]) +
             " [" + (max_ok ? "ok" : "MISS") + "]";
  return o;
}

// Rejection frequency of the detector over independent logs whose halves
// are drawn from `first` and `second`.
double RejectionRate(const std::array<double, 3>& first,
                     const std::array<double, 3>& second, std::uint64_t seed) {
  DetectorConfig config;
  config.check_probability = 1.0;
  Rng rng(seed);
  const char* hidden[] = {"a", "b", "c"};
  int rejections = 0;
  for (int t = 0; t < kDetectorTrials; ++t) {
    Detector detector(config);
    int pair = detector.RegisterInfostate({0, "s"}, 1);
    for (int i = 0; i < kDetectorLogLength; ++i) {
      const auto& p = i < kDetectorLogLength / 2 ? first : second;
      detector.Record(pair, 0.0, hidden[rng.Sample(p)]);
    }
    if (detector.Detect(pair)) ++rejections;
  }
  return static_cast<double>(rejections) / kDetectorTrials;
}

Outcome DetectorCalibration() {
  const std::array<double, 3> base = {0.5, 0.3, 0.2};
  // Total variation 0.2 from `base`.
  const std::array<double, 3> shifted = {0.3, 0.3, 0.4};
  double type_one = RejectionRate(base, base, 1);
  double power = RejectionRate(base, shifted, 2);
  Outcome o;
  o.pass = type_one >= kTypeOneLow && type_one <= kTypeOneHigh &&
           power >= kPowerTarget;
  o.detail = "type-I " + Fmt(type_one) + " in [" + Fmt(kTypeOneLow) + ", " +
             Fmt(kTypeOneHigh) + "], power " + Fmt(power) + " >= " +
             Fmt(kPowerTarget) + " (" + std::to_string(kDetectorTrials) +
             " logs of " + std::to_string(kDetectorLogLength) +
             ", significance 0.05)";
  return o;
}

Outcome ChiSquaredNumerics() {
  const std::vector<std::pair<double, double>> points = {
      {20, 1},   {0.5, 1},   {3.84, 1},  {1e-6, 1},   {6.63, 1},
      {5.99, 2}, {0.1, 2},   {7.81, 3},  {30, 3},     {9.49, 4},
      {1, 5},    {11.07, 5}, {50, 10},   {18.31, 10}, {0.01, 10},
      {100, 50}, {67.5, 50}, {30, 50},   {250, 200},  {180, 200}};
  double worst = 0.0;
  for (auto [x, df] : points) {
    worst = std::max(worst, std::abs(ChiSquaredSurvival(x, df) -
                                     oracle::ReferenceChiSquaredSurvival(x, df)));
  }
  std::vector<std::int64_t> a = {10, 0}, b = {0, 10};
  ChiSquaredResult flip = PearsonHomogeneity(a, b);
  bool table_ok = std::abs(flip.statistic - 20.0) < 1e-12 &&
                  flip.degrees_of_freedom == 1 &&
                  std::abs(flip.p_value - 7.74e-6) < 0.005e-6;
  Outcome o;
  o.pass = worst <= kRealTolerance && table_ok;
  o.detail = std::to_string(points.size()) +
             " survival values, max |diff| vs Boost.Math " + Fmt(worst) +
             " (tolerance " + Fmt(kRealTolerance) + "); (20, df 1) p = " +
             Fmt(flip.p_value);
  return o;
}

TabularPolicy KuhnPolicy(const std::array<oracle::KuhnStrategy, 2>& s) {
  TabularPolicy policy;
  WalkTree(*BuildEnvironment("kuhn"), [&](const State& state, double,
                                          const Reward&) {
    if (state.IsTerminal() || state.CurrentPlayer().IsChance()) return true;
    const auto& kuhn = dynamic_cast<const KuhnState&>(state);
    int agent = state.CurrentPlayer().agent();
    std::string label = std::to_string(kuhn.card(agent));
    for (std::size_t i = 1; i < state.History().size(); ++i) {
      label += state.History()[i] == 1 ? 'b' : 'p';
    }
    double bet = s[agent].count(label) ? s[agent].at(label) : 0.5;
    policy.Set(state.Infostate(state.CurrentPlayer()), {1 - bet, bet});
    return true;
  });
  return policy;
}

Outcome ExploitabilityOracle() {
  auto kuhn = BuildEnvironment("kuhn");
  oracle::KuhnStrategy uniform;
  double brute = oracle::KuhnBruteForceBestResponse(uniform, 0) +
                 oracle::KuhnBruteForceBestResponse(uniform, 1);
  double ours = Exploitability(*kuhn, UniformPolicy());
  bool uniform_ok = std::abs(ours - brute) <= kRealTolerance;

  auto wrps = BuildEnvironment("wrps");
  TabularPolicy nash;
  auto root = wrps->NewInitialState();
  nash.Set(root->Infostate(PlayerId::Agent(0)), {0.25, 0.5, 0.25});
  auto second = root->Child(0).state;
  nash.Set(second->Infostate(PlayerId::Agent(1)), {0.25, 0.5, 0.25});
  double rps = Exploitability(*wrps, nash);
  bool rps_ok = std::abs(rps) <= kRealTolerance;

  auto equilibrium = oracle::KuhnCfrPlus(20000);
  double value = ExpectedReturns(CachedTree(*kuhn), KuhnPolicy(equilibrium))[0];
  bool value_ok = std::abs(value - kKuhnValue) <= kKuhnValueTolerance;

  Outcome o;
  o.pass = uniform_ok && rps_ok && value_ok;
  o.detail = "Kuhn uniform " + Fmt(ours) + " vs brute force " + Fmt(brute) +
             " (|diff| " + Fmt(std::abs(ours - brute)) + "); wRPS Nash " +
             Fmt(rps) + "; Kuhn value at CFR+ equilibrium " + Fmt(value) +
             " vs -1/18 (tolerance " + Fmt(kKuhnValueTolerance) + ")";
  return o;
}

Outcome StructuralBound() {
  auto game = BuildEnvironment("cartpole");
  LearnerConfig config;
  config.detector.mode = DetectorMode::kAlwaysStationary;
  Abcs learner(game, config, 0);
  const int actions = 2;
  const int episodes = 2000;
  bool ok = true;
  std::int64_t total_depth = 0, total_updates = 0;
  for (int e = 0; e < episodes; ++e) {
    learner.RunIteration();
    const auto& st = learner.last_traversal();
    ok = ok && st.expansions == st.depth && st.q_updates <= actions * st.depth;
    total_depth += st.depth;
    total_updates += st.q_updates;
  }
  Outcome o;
  o.pass = ok;
  o.detail = std::to_string(episodes) + " episodes, " +
             std::to_string(total_depth) + " trajectory decisions, " +
             std::to_string(total_updates) +
             " Q-updates (bound A x depth = " +
             std::to_string(actions * total_depth) +
             "), expansions == depth on every episode: " + (ok ? "yes" : "no");
  return o;
}

struct Criterion {
  const char* name;
  double runtime_limit_seconds;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {"bootcfr_equivalence", 10, BootCfrEquivalence},
      {"abcs_maxcfr_reduction", 10, AbcsReducesToMaxCfr},
      {"weighted_rps", 60, WeightedRps},
      {"kuhn", 300, Kuhn},
      {"cartpole", 600, Cartpole},
      {"stacked", 3600, Stacked},
      {"detector_calibration", 60, DetectorCalibration},
      {"chi_squared_numerics", 60, ChiSquaredNumerics},
      {"exploitability_oracle", 60, ExploitabilityOracle},
      {"structural_bound", 60, StructuralBound},
  };
  return criteria;
}

int Main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.size() == 1 && wanted[0] == "--list") {
    for (const auto& c : Criteria()) std::printf("%s\n", c.name);
    return 0;
  }
  for (const auto& w : wanted) {
    bool known = std::any_of(Criteria().begin(), Criteria().end(),
                             [&](const Criterion& c) { return w == c.name; });
    if (!known) {
      std::fprintf(stderr, "unknown criterion '%s' (try --list)\n", w.c_str());
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : Criteria()) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) {
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (seconds > c.runtime_limit_seconds) {
      o.pass = false;
      o.detail += "; runtime over the " + Fmt(c.runtime_limit_seconds) +
                  "s limit";
    }
    std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", c.name,
                seconds, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace abcs

int main(int argc, char** argv) { return abcs::Main(argc, argv); }
