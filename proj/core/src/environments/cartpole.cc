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

#include "abcs/environments/cartpole.h"

#include <cmath>
#include <sstream>

#include "abcs/environments/tags.h"

namespace abcs {
namespace cartpole {

bool Integrate(const Physics& p, Physical& s, Action action) {
  double force = action == kPushRight ? p.force_magnitude : -p.force_magnitude;
  double total_mass = p.cart_mass + p.pole_mass;
  double polemass_length = p.pole_mass * p.pole_half_length;
  double cos_theta = std::cos(s[2]);
  double sin_theta = std::sin(s[2]);
  double temp =
      (force + polemass_length * s[3] * s[3] * sin_theta) / total_mass;
  double theta_acc =
      (p.gravity * sin_theta - cos_theta * temp) /
      (p.pole_half_length *
       (4.0 / 3.0 - p.pole_mass * cos_theta * cos_theta / total_mass));
  double x_acc = temp - polemass_length * theta_acc * cos_theta / total_mass;
  double dt = p.integration_step;
  s[0] += dt * s[1];
  s[1] += dt * x_acc;
  s[2] += dt * s[3];
  s[3] += dt * theta_acc;
  return s[0] < -p.x_limit || s[0] > p.x_limit || s[2] < -p.theta_limit ||
         s[2] > p.theta_limit;
}

StepResult Step(const Physics& physics, const Physical& state, Action action,
                double gate_draw) {
  ABCS_CHECK(action == kPushLeft || action == kPushRight);
  StepResult out;
  out.state = state;
  bool failed = Integrate(physics, out.state, action);
  out.reward = failed ? 0.0 : 1.0;
  out.terminated = failed || gate_draw < physics.termination_probability;
  return out;
}

Bins Discretize(const Physical& state) {
  Bins bins;
  for (int d = 0; d < 4; ++d) {
    double frac = (state[d] - kBinLow[d]) / (kBinHigh[d] - kBinLow[d]);
    double scaled = std::floor(frac * kNumBins);
    int b;
    if (std::isnan(scaled) || scaled < 0) {
      b = 0;
    } else if (scaled >= kNumBins) {
      b = kNumBins - 1;
    } else {
      b = static_cast<int>(scaled);
    }
    bins[d] = b;
  }
  return bins;
}

Physical InitialState(int outcome) {
  ABCS_CHECK(outcome >= 0 && outcome < kNumInitialStates);
  Physical s;
  for (int d = 0; d < 4; ++d) {
    s[d] = -0.04 + 0.02 * (outcome % 5);
    outcome /= 5;
  }
  return s;
}

}  // namespace cartpole

CartpoleState::CartpoleState(const cartpole::Physics& physics)
    : State(static_cast<std::uint8_t>(GameTag::kCartpole)),
      physics_(&physics) {}

PlayerId CartpoleState::CurrentPlayer() const {
  ABCS_CHECK_MSG(!IsTerminal(), "terminal state has no player");
  return phase_ == Phase::kAgent ? PlayerId::Agent(0) : PlayerId::Chance();
}

int CartpoleState::NumActions() const {
  switch (phase_) {
    case Phase::kReset:
      return cartpole::kNumInitialStates;
    case Phase::kAgent:
    case Phase::kGate:
      return 2;
    case Phase::kTerminal:
      return 0;
  }
  return 0;
}

std::vector<double> CartpoleState::ChanceProbabilities() const {
  if (phase_ == Phase::kReset) {
    return std::vector<double>(cartpole::kNumInitialStates,
                               1.0 / cartpole::kNumInitialStates);
  }
  ABCS_CHECK_MSG(phase_ == Phase::kGate, "not a chance node");
  double p = physics_->termination_probability;
  return {1.0 - p, p};
}

void CartpoleState::AppendKeyBytes(const cartpole::Bins& bins,
                                   std::string& out) {
  out.push_back(static_cast<char>(GameTag::kCartpole));
  out.push_back(0);
  for (int b : bins) out.push_back(static_cast<char>('0' + b));
}

InfostateKey CartpoleState::Infostate(PlayerId player) const {
  ABCS_CHECK(!IsTerminal() && player == CurrentPlayer());
  InfostateKey key;
  key.player = 0;
  AppendKeyBytes(cartpole::Discretize(physical_), key.bytes);
  return key;
}

std::string CartpoleState::HiddenKey() const {
  if (IsTerminal()) return "terminal";
  std::string key;
  AppendKeyBytes(cartpole::Discretize(physical_), key);
  return key;
}

Reward CartpoleState::ApplyInPlace(Action action) {
  switch (phase_) {
    case Phase::kReset:
      physical_ = cartpole::InitialState(action);
      phase_ = Phase::kAgent;
      return Reward{};
    case Phase::kAgent:
      if (cartpole::Integrate(*physics_, physical_, action)) {
        failed_ = true;
        phase_ = Phase::kTerminal;
        return Reward{};
      }
      phase_ = Phase::kGate;
      return Reward{1.0, 0.0};
    case Phase::kGate:
      phase_ = action == 0 ? Phase::kAgent : Phase::kTerminal;
      return Reward{};
    case Phase::kTerminal:
      break;
  }
  ABCS_CHECK(false);
  return Reward{};
}

std::string CartpoleState::ToString() const {
  std::ostringstream out;
  out << "x=" << physical_[0] << " v=" << physical_[1]
      << " theta=" << physical_[2] << " omega=" << physical_[3];
  return out.str();
}

CartpoleGame::CartpoleGame(double termination_probability) {
  ABCS_CHECK(termination_probability > 0 && termination_probability < 1);
  physics_.termination_probability = termination_probability;
}

}  // namespace abcs
