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

#ifndef ABCS_TESTS_ORACLES_CHI_SQUARED_REFERENCE_H_
#define ABCS_TESTS_ORACLES_CHI_SQUARED_REFERENCE_H_

#include <array>
#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace abcs::oracle {

// Upper tail from Boost.Math.
inline double ReferenceChiSquaredSurvival(double statistic, double df) {
  boost::math::chi_squared_distribution<double> dist(df);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Textbook Pearson statistic for a 2 x C table; zero columns skipped.
// Returns {statistic, df}.
inline std::array<double, 2> ReferencePearson(
    const std::vector<std::int64_t>& first,
    const std::vector<std::int64_t>& second) {
  double n1 = 0, n2 = 0;
  for (auto v : first) n1 += static_cast<double>(v);
  for (auto v : second) n2 += static_cast<double>(v);
  double n = n1 + n2;
  double statistic = 0;
  int columns = 0;
  for (std::size_t j = 0; j < first.size(); ++j) {
    double total = static_cast<double>(first[j] + second[j]);
    if (total == 0) continue;
    ++columns;
    double e1 = n1 * total / n;
    double e2 = n2 * total / n;
    double d1 = static_cast<double>(first[j]) - e1;
    double d2 = static_cast<double>(second[j]) - e2;
    statistic += d1 * d1 / e1 + d2 * d2 / e2;
  }
  return {statistic, static_cast<double>(columns - 1)};
}

}  // namespace abcs::oracle

#endif  // ABCS_TESTS_ORACLES_CHI_SQUARED_REFERENCE_H_
