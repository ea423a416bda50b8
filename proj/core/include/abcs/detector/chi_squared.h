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

#ifndef ABCS_DETECTOR_CHI_SQUARED_H_
#define ABCS_DETECTOR_CHI_SQUARED_H_

#include <cstdint>
#include <span>

namespace abcs {

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
double RegularizedGammaQ(double a, double x);

// Upper tail of the chi-squared distribution with `df` degrees of freedom.
double ChiSquaredSurvival(double statistic, double df);

struct ChiSquaredResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson homogeneity test on a 2 x C table given as two count rows of
// equal length. Columns with zero total are dropped; with one or no
// remaining column the p-value is 1. Both rows must be non-empty.
ChiSquaredResult PearsonHomogeneity(std::span<const std::int64_t> first,
                                    std::span<const std::int64_t> second);

}  // namespace abcs

#endif  // ABCS_DETECTOR_CHI_SQUARED_H_
