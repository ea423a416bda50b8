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

#ifndef ABCS_LEARNERS_SOFTMAX_H_
#define ABCS_LEARNERS_SOFTMAX_H_

#include <span>

namespace abcs {

// out[i] proportional to exp(logits[i]), computed with max subtraction.
void SoftmaxLogits(std::span<const double> logits, std::span<double> out);

// out[i] proportional to exp(values[i] / temperature). A temperature that
// underflowed to 0 yields the uniform distribution over the maxima.
void SoftmaxPolicy(std::span<const double> values, double temperature,
                   std::span<double> out);

// Lowest index among the maxima.
int Argmax(std::span<const double> values);

}  // namespace abcs

#endif  // ABCS_LEARNERS_SOFTMAX_H_
