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

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "abcs/environments/kuhn_poker.h"
#include "abcs/environments/registry.h"
#include "abcs/evaluation/best_response.h"
#include "abcs/learners/abcs.h"
#include "abcs/learners/factory.h"
#include "abcs/learners/learner.h"
#include "abcs/learners/schedule.h"
#include "abcs/learners/softmax.h"
#include "test_games.h"

namespace abcs {
namespace {

using testing::MakeBandit;
using testing::MakeStochasticBandit;
using testing::MakeTwoLevel;

std::unique_ptr<Learner> Make(const std::string& algo,
                              std::shared_ptr<const Game> game,
                              LearnerConfig config = {},
                              std::uint64_t seed = 0) {
  return MakeLearner(algo, std::move(game), config, seed);
}

void Iterate(Learner& learner, int iterations) {
  for (int i = 0; i < iterations; ++i) learner.RunIteration();
}

int RowOf(const Learner& learner, int infostate) {
  std::string bytes = {static_cast<char>(200), 0};
  AppendVarint(bytes, infostate);
  return learner.table().Find(bytes);
}

TEST(SoftmaxTest, Examples) {
  std::vector<double> out(2);
  SoftmaxPolicy(std::vector<double>{0, 0}, 3.0, out);
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.5);
  SoftmaxPolicy(std::vector<double>{1, 0}, 1.0, out);
  EXPECT_NEAR(out[0], std::exp(1.0) / (std::exp(1.0) + 1), 1e-15);
  EXPECT_NEAR(out[0], 0.7311, 1e-4);
  EXPECT_NEAR(out[1], 0.2689, 1e-4);
}

TEST(SoftmaxTest, ShiftInvariance) {
  std::vector<double> x = {0.3, -1.2, 2.5, 0.0};
  std::vector<double> a(4), b(4);
  for (double c : {-1000.0, -3.5, 0.25, 700.0}) {
    std::vector<double> shifted = x;
    for (double& v : shifted) v += c;
    SoftmaxPolicy(x, 0.7, a);
    SoftmaxPolicy(shifted, 0.7, b);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
  }
}

TEST(SoftmaxTest, LargeLogitsStayFinite) {
  std::vector<double> out(3);
  SoftmaxLogits(std::vector<double>{1e6, 1e6 - 1, -1e6}, out);
  double total = out[0] + out[1] + out[2];
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_GT(out[0], out[1]);
}

TEST(SoftmaxTest, ZeroTemperatureIsUniformOverMaxima) {
  std::vector<double> out(3);
  SoftmaxPolicy(std::vector<double>{2, 5, 5}, 0.0, out);
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[1], 0.5);
  EXPECT_EQ(out[2], 0.5);
  EXPECT_THROW(SoftmaxPolicy(std::vector<double>{1, 2}, -1.0, out),
               ContractViolation);
}

TEST(SoftmaxTest, ArgmaxPrefersLowestIndex) {
  EXPECT_EQ(Argmax(std::vector<double>{1, 3, 3}), 1);
  EXPECT_EQ(Argmax(std::vector<double>{0, 0}), 0);
}

TEST(ScheduleTest, StepwiseDecay) {
  Schedule bql{10.0, 0.99, 50};
  EXPECT_DOUBLE_EQ(bql(0), 10.0);
  EXPECT_DOUBLE_EQ(bql(49), 10.0);
  EXPECT_DOUBLE_EQ(bql(50), 9.9);
  EXPECT_NEAR(bql(1000), 10.0 * std::pow(0.99, 20), 1e-12);
  Schedule constant;
  EXPECT_EQ(constant(123456), 1.0);
}

TEST(FactoryTest, NamesAndAliases) {
  EXPECT_EQ(CanonicalAlgorithmName("MAX-CFR"), "maxcfr");
  EXPECT_EQ(CanonicalAlgorithmName("es_mccfr"), "es-mccfr");
  EXPECT_THROW(CanonicalAlgorithmName("unknown-algo"), ConfigError);
  for (const std::string& name : AlgorithmNames()) {
    auto learner = Make(name, BuildEnvironment("kuhn"));
    EXPECT_EQ(learner->Name(), name);
  }
  EXPECT_THROW(Make("bootcfr", BuildEnvironment("cartpole")), ConfigError);
}

TEST(BqlTest, SingleStepTerminalReward) {
  auto learner = Make("bql", MakeBandit({1.0}));
  Iterate(*learner, 1);
  int row = RowOf(*learner, 0);
  ASSERT_GE(row, 0);
  EXPECT_EQ(learner->Value(row, 0), 1.0);
  EXPECT_EQ(learner->table().pair_counts(row)[0], 1);
}

TEST(BqlTest, RunningMeanOfTargets) {
  // One arm paying 1 or 0 by a fair coin. The only world-stream draw per
  // iteration is that coin, so the targets can be replayed.
  auto game = MakeStochasticBandit({{{0.5, 1.0}, {0.5, 0.0}}});
  const std::uint64_t seed = 17;
  auto learner = Make("bql", game, {}, seed);
  Rng world = MakeStream(seed, Stream::kWorld);
  const std::vector<double> coin = {0.5, 0.5};
  double sum = 0;
  for (int k = 1; k <= 200; ++k) {
    learner->RunIteration();
    sum += world.Sample(coin) == 0 ? 1.0 : 0.0;
    int row = RowOf(*learner, 0);
    ASSERT_NEAR(learner->Value(row, 0), sum / k, 1e-9) << "after " << k;
  }
}

TEST(BqlTest, TwoTargetsAverage) {
  auto game = MakeStochasticBandit({{{0.5, 1.0}, {0.5, 0.0}}});
  // Find a seed whose first two coins give targets 1 then 0.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng world = MakeStream(seed, Stream::kWorld);
    const std::vector<double> coin = {0.5, 0.5};
    if (world.Sample(coin) != 0 || world.Sample(coin) != 1) continue;
    auto learner = Make("bql", game, {}, seed);
    Iterate(*learner, 2);
    EXPECT_EQ(learner->Value(RowOf(*learner, 0), 0), 0.5);
    return;
  }
  FAIL() << "no suitable seed";
}

TEST(MaxCfrTest, TerminalChildrenConvergeAtRateOneOverCount) {
  auto learner = Make("maxcfr", MakeBandit({1.0, 3.0}));
  Iterate(*learner, 1);
  int row = RowOf(*learner, 0);
  EXPECT_EQ(learner->Value(row, 0), 1.0);
  EXPECT_EQ(learner->Value(row, 1), 3.0);
  Iterate(*learner, 9);
  EXPECT_EQ(learner->Value(row, 0), 1.0);
  EXPECT_EQ(learner->table().row(row).visits, 10);
}

// Hand-computed first iteration on the two-level game. Both learners set
// Q(inner) = (1, 0) and Q(root, 0) = 0.5. BOOTCFR propagates the inner
// increments under the pre-update (uniform) policy: Q(root, 1) = 0.5.
// MAX-CFR propagates the increment of the post-update argmax: Q(root, 1) = 1.
TEST(BootstrapTest, GreedyAndExpectedPropagationDiffer) {
  auto boot = Make("bootcfr", MakeTwoLevel());
  auto max = Make("maxcfr", MakeTwoLevel());
  Iterate(*boot, 1);
  Iterate(*max, 1);
  for (const Learner* l : {boot.get(), max.get()}) {
    int inner = RowOf(*l, 1);
    EXPECT_DOUBLE_EQ(l->Value(inner, 0), 1.0);
    EXPECT_DOUBLE_EQ(l->Value(inner, 1), 0.0);
    EXPECT_DOUBLE_EQ(l->Value(RowOf(*l, 0), 0), 0.5);
  }
  EXPECT_DOUBLE_EQ(boot->Value(RowOf(*boot, 0), 1), 0.5);
  EXPECT_DOUBLE_EQ(max->Value(RowOf(*max, 0), 1), 1.0);
}

TEST(BootstrapTest, BootCfrMatchesEsMccfrOnKuhn) {
  auto game = BuildEnvironment("kuhn");
  auto es = Make("es-mccfr", game, {}, 3);
  auto boot = Make("bootcfr", game, {}, 3);
  for (int it = 1; it <= 1000; ++it) {
    es->RunIteration();
    boot->RunIteration();
    ASSERT_EQ(es->nodes_touched(), boot->nodes_touched());
  }
  const InfostateTable& te = es->table();
  const InfostateTable& tb = boot->table();
  ASSERT_EQ(te.size(), tb.size());
  for (int row = 0; row < te.size(); ++row) {
    ASSERT_EQ(te.key(row), tb.key(row));
    ASSERT_EQ(te.row(row).visits, tb.row(row).visits);
    for (int a = 0; a < te.row(row).num_actions; ++a) {
      EXPECT_EQ(te.pair_counts(row)[a], tb.pair_counts(row)[a]);
      double q_es = es->Value(row, a);
      EXPECT_NEAR(boot->Value(row, a), q_es, 1e-9 * std::max(1.0, std::abs(q_es)));
      EXPECT_NEAR(tb.average(row)[a], te.average(row)[a], 1e-9);
    }
  }
}

TEST(AbcsTest, AlwaysNonstationaryReducesToMaxCfr) {
  auto game = BuildEnvironment("kuhn");
  LearnerConfig config;
  config.detector.mode = DetectorMode::kAlwaysNonstationary;
  config.abcs_epsilon = 0.0;
  auto abcs = Make("abcs", game, config, 5);
  auto max = Make("maxcfr", game, config, 5);
  for (int it = 1; it <= 1000; ++it) {
    abcs->RunIteration();
    max->RunIteration();
  }
  EXPECT_EQ(abcs->nodes_touched(), max->nodes_touched());
  const InfostateTable& ta = abcs->table();
  const InfostateTable& tm = max->table();
  ASSERT_EQ(ta.size(), tm.size());
  for (int row = 0; row < ta.size(); ++row) {
    ASSERT_EQ(ta.key(row), tm.key(row));
    EXPECT_EQ(ta.row(row).visits, tm.row(row).visits);
    for (int a = 0; a < ta.row(row).num_actions; ++a) {
      EXPECT_EQ(abcs->Value(row, a), max->Value(row, a));
      EXPECT_EQ(ta.pair_counts(row)[a], tm.pair_counts(row)[a]);
      EXPECT_EQ(ta.average(row)[a], tm.average(row)[a]);
    }
  }
}

TEST(AbcsTest, AlwaysStationaryOnCartpoleIsLinearInDepth) {
  auto game = BuildEnvironment("cartpole");
  LearnerConfig config;
  config.detector.mode = DetectorMode::kAlwaysStationary;
  auto learner = std::make_unique<Abcs>(game, config, 9);
  const int actions = 2;
  for (int it = 0; it < 300; ++it) {
    std::int64_t before = learner->nodes_touched();
    learner->RunIteration();
    const Abcs::TraversalStats& stats = learner->last_traversal();
    ASSERT_GT(stats.depth, 0);
    EXPECT_EQ(stats.expansions, stats.depth);
    EXPECT_LE(stats.q_updates, actions * stats.depth);
    // Root, initial chance, then per decision each action and its gate.
    EXPECT_LE(learner->nodes_touched() - before, 2 + 2 * actions * stats.depth);
  }
}

TEST(AbcsTest, ScriptedFlagsBranchOnlyTheLeducPhase) {
  auto game = BuildEnvironment("stacked");
  LearnerConfig config;
  config.detector.mode = DetectorMode::kScripted;
  config.detector.script = [](const InfostateKey& key, Action) {
    return static_cast<std::uint8_t>(key.bytes[0]) == 3;  // Leduc tag
  };
  auto learner = std::make_unique<Abcs>(game, config, 4);
  Iterate(*learner, 50);
  const Detector* d = learner->detector();
  EXPECT_EQ(d->NonstationaryFraction([](const InfostateKey& k) {
    return static_cast<std::uint8_t>(k.bytes[0]) == 3;
  }), 1.0);
  EXPECT_EQ(d->NonstationaryFraction([](const InfostateKey& k) {
    return static_cast<std::uint8_t>(k.bytes[0]) != 3;
  }), 0.0);
}

TEST(AbcsTest, KuhnWithChiSquaredFlagsSomePairsAndConverges) {
  auto game = BuildEnvironment("kuhn");
  auto learner = Make("abcs", game, {}, 0);
  while (learner->nodes_touched() < 3'000'000) learner->RunIteration();
  EXPECT_GT(learner->detector()->NonstationaryFraction(), 0.0);
  EXPECT_LT(Exploitability(*game, learner->AveragePolicy()), 0.05);
}

TEST(OsMccfrTest, UniformBehaviorCorrectsByActionCount) {
  LearnerConfig config;
  config.os_epsilon = 1.0;
  auto learner = Make("os-mccfr", MakeBandit({1.0, 2.0, 4.0}), config);
  Iterate(*learner, 1);
  int row = RowOf(*learner, 0);
  const std::vector<double> rewards = {1.0, 2.0, 4.0};
  int sampled = 0;
  for (int a = 0; a < 3; ++a) {
    double v = learner->table().values(row)[a];
    if (v != 0) {
      ++sampled;
      EXPECT_DOUBLE_EQ(v, 3.0 * rewards[a]);
    }
  }
  EXPECT_EQ(sampled, 1);
}

TEST(EsMccfrTest, SingleActionValuesSumReturns) {
  auto learner = Make("es-mccfr", MakeBandit({2.5}));
  Iterate(*learner, 7);
  int row = RowOf(*learner, 0);
  EXPECT_DOUBLE_EQ(learner->table().values(row)[0], 7 * 2.5);
}

TEST(LearnerTest, NodesTouchedCountsEveryVisitedState) {
  auto learner = Make("es-mccfr", BuildEnvironment("wrps"));
  learner->RunIteration();
  // Agent 0: root + 3 branches + 3 sampled replies. Agent 1: root + the
  // sampled opening + 3 branches.
  EXPECT_EQ(learner->nodes_touched(), 12);
  learner->RunIteration();
  EXPECT_EQ(learner->nodes_touched(), 24);
}

// Kuhn bet, with agent 1 frozen to always fold.
class FoldingProbe : public Learner {
 public:
  using Learner::Learner;
  std::string Name() const override { return "probe"; }
  void PolicyAt(int row, std::span<double> out) const override {
    for (double& p : out) p = 0;
    out[0] = 1;  // agent 1: fold
  }
  double BetReward(const State& state, bool* terminal) {
    Child child = GetChild(state, 1, 0);
    *terminal = child.state->IsTerminal() && child.row < 0;
    return child.reward;
  }

 protected:
  void Traverse(int, std::unique_ptr<State>) override {}
};

TEST(LearnerTest, GetChildSkipsFrozenOpponents) {
  auto game = std::make_shared<KuhnGame>();
  FoldingProbe probe(game, {}, 0);
  auto state = game->NewInitialState()->Child(0).state;
  bool terminal = false;
  EXPECT_EQ(probe.BetReward(*state, &terminal), 1.0);
  EXPECT_TRUE(terminal);
  EXPECT_EQ(probe.nodes_touched(), 2);
}

class LearnerPropertyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(LearnerPropertyTest, DeterministicGivenSeed) {
  // Full-width learners branch exponentially on Cartpole episodes.
  const std::string param = GetParam();
  bool sampled = param == "bql" || param == "os-mccfr" || param == "abcs";
  for (const std::string env : {"kuhn", sampled ? "cartpole" : "leduc"}) {
    auto game = BuildEnvironment(env);
    auto a = Make(GetParam(), game, {}, 42);
    auto b = Make(GetParam(), game, {}, 42);
    Iterate(*a, 200);
    Iterate(*b, 200);
    ASSERT_EQ(a->nodes_touched(), b->nodes_touched());
    ASSERT_EQ(a->table().size(), b->table().size());
    for (int row = 0; row < a->table().size(); ++row) {
      ASSERT_EQ(a->table().key(row), b->table().key(row));
      for (int x = 0; x < a->table().row(row).num_actions; ++x) {
        ASSERT_EQ(a->Value(row, x), b->Value(row, x));
      }
    }
  }
}

TEST_P(LearnerPropertyTest, PoliciesAreDistributions) {
  auto game = BuildEnvironment("leduc");
  auto learner = Make(GetParam(), game, {}, 1);
  std::int64_t previous = learner->nodes_touched();
  for (int it = 0; it < 300; ++it) {
    learner->RunIteration();
    ASSERT_GT(learner->nodes_touched(), previous);
    previous = learner->nodes_touched();
  }
  std::vector<double> out;
  for (int row = 0; row < learner->table().size(); ++row) {
    out.assign(learner->table().row(row).num_actions, 0.0);
    learner->PolicyAt(row, out);
    double total = 0;
    for (double p : out) {
      ASSERT_GE(p, 0.0);
      total += p;
    }
    ASSERT_NEAR(total, 1.0, 1e-9);
  }
  TabularPolicy average = learner->AveragePolicy();
  EXPECT_GE(Exploitability(*game, average), -1e-9);
}

TEST_P(LearnerPropertyTest, PairCountsMatchVisitsWhenAllActionsUpdate) {
  const std::string algo = GetParam();
  if (algo != "maxcfr" && algo != "bootcfr" && algo != "abcs") GTEST_SKIP();
  auto learner = Make(algo, BuildEnvironment("kuhn"), {}, 2);
  Iterate(*learner, 300);
  for (int row = 0; row < learner->table().size(); ++row) {
    std::int64_t total = 0;
    const int banks = learner->table().dual() ? 2 : 1;
    for (int b = 0; b < banks; ++b) {
      for (auto c : learner->table().pair_counts(row, b)) total += c;
    }
    EXPECT_EQ(total, learner->table().row(row).visits *
                         learner->table().row(row).num_actions);
  }
}

INSTANTIATE_TEST_SUITE_P(AllLearners, LearnerPropertyTest,
                         ::testing::ValuesIn(AlgorithmNames()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

}  // namespace
}  // namespace abcs
