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

#include "abcs/learners/softmax.h"

#include <cmath>

#include "abcs/check.h"

namespace abcs {

void SoftmaxLogits(std::span<const double> logits, std::span<double> out) {
  ABCS_CHECK(!logits.empty() && logits.size() == out.size());
  double max = logits[0];
  for (double x : logits) max = x > max ? x : max;
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max);
    total += out[i];
  }
  for (double& p : out) p /= total;
}

void SoftmaxPolicy(std::span<const double> values, double temperature,
                   std::span<double> out) {
  ABCS_CHECK_MSG(temperature >= 0, "temperature must be positive");
  ABCS_CHECK(!values.empty() && values.size() == out.size());
  // Shift before scaling so a tiny temperature cannot overflow.
  double max = values[0];
  for (double x : values) max = x > max ? x : max;
  if (temperature == 0) {
    // A decayed schedule that underflowed: the zero-temperature limit.
    double ties = 0;
    for (double x : values) ties += x == max;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out[i] = values[i] == max ? 1.0 / ties : 0.0;
    }
    return;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - max) / temperature;
  }
  SoftmaxLogits(out, out);
}

int Argmax(std::span<const double> values) {
  ABCS_CHECK(!values.empty());
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace abcs
