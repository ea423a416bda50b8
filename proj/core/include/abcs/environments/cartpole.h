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

#ifndef ABCS_ENVIRONMENTS_CARTPOLE_H_
#define ABCS_ENVIRONMENTS_CARTPOLE_H_

#include <array>
#include <memory>
#include <string>

#include "abcs/game.h"

namespace abcs {
namespace cartpole {

// (cart position, cart velocity, pole angle, pole angular velocity).
using Physical = std::array<double, 4>;
using Bins = std::array<int, 4>;

inline constexpr int kNumBins = 10;
inline constexpr std::array<double, 4> kBinLow = {-2.4, -3.0, -0.5, -2.0};
inline constexpr std::array<double, 4> kBinHigh = {2.4, 3.0, 0.5, 2.0};

struct Physics {
  double gravity = 9.8;
  double cart_mass = 1.0;
  double pole_mass = 0.1;
  double pole_half_length = 0.5;
  double force_magnitude = 10.0;
  double integration_step = 0.02;
  double x_limit = 2.4;
  double theta_limit = 12.0 * 2.0 * 3.14159265358979323846 / 360.0;
  double termination_probability = 1.0 / 200.0;
};

enum Push : Action { kPushLeft = 0, kPushRight = 1 };

// One Euler step. True if the cart or pole left its bounds.
bool Integrate(const Physics& physics, Physical& state, Action action);

struct StepResult {
  Physical state;
  bool terminated = false;
  double reward = 0.0;
};

// Physics step followed by the geometric gate: the episode also ends when
// `gate_draw` < termination probability. A step earns 1 unless the pole
// or cart fails on it.
StepResult Step(const Physics& physics, const Physical& state, Action action,
                double gate_draw);

// Half-open [lo, hi) bins, last bin closed, out-of-range values clamped.
Bins Discretize(const Physical& state);

// Root chance outcomes: a 5^4 grid over [-0.04, 0.04] in each component.
inline constexpr int kNumInitialStates = 625;
Physical InitialState(int outcome);

}  // namespace cartpole

// Single-agent Markovian Cartpole. After each surviving step a chance gate
// either continues (1 - p) or stops (p). Infostates are the bin tuple.
class CartpoleState : public State {
 public:
  explicit CartpoleState(const cartpole::Physics& physics);

  bool IsTerminal() const override { return phase_ == Phase::kTerminal; }
  PlayerId CurrentPlayer() const override;
  int NumActions() const override;
  std::vector<double> ChanceProbabilities() const override;
  InfostateKey Infostate(PlayerId player) const override;
  std::string HiddenKey() const override;
  std::unique_ptr<State> Clone() const override {
    return std::make_unique<CartpoleState>(*this);
  }
  std::string ToString() const override;

  const cartpole::Physical& physical() const { return physical_; }
  // True once the cart or pole went out of bounds.
  bool failed() const { return failed_; }

  // Appends the bin-tuple infostate bytes for `bins` to `out`.
  static void AppendKeyBytes(const cartpole::Bins& bins, std::string& out);

 protected:
  Reward ApplyInPlace(Action action) override;

 private:
  enum class Phase { kReset, kAgent, kGate, kTerminal };

  const cartpole::Physics* physics_;
  cartpole::Physical physical_{};
  Phase phase_ = Phase::kReset;
  bool failed_ = false;
};

class CartpoleGame : public Game {
 public:
  explicit CartpoleGame(double termination_probability = 1.0 / 200.0);

  std::string Name() const override { return "cartpole"; }
  int NumAgents() const override { return 1; }
  std::unique_ptr<State> NewInitialState() const override {
    return std::make_unique<CartpoleState>(physics_);
  }
  bool PerfectRecall() const override { return false; }
  bool ZeroSum() const override { return false; }
  int MaxActions() const override { return cartpole::kNumInitialStates; }

  const cartpole::Physics& physics() const { return physics_; }
  // Best achievable expected return: every step survives, so the return is
  // the expected number of gate draws, 1 / p.
  double OptimalReturn() const { return 1.0 / physics_.termination_probability; }

 private:
  cartpole::Physics physics_;
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_CARTPOLE_H_
