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

#include "abcs/detector/chi_squared.h"

#include <cmath>
#include <limits>

#include "abcs/check.h"

namespace abcs {

namespace {

constexpr int kMaxIterations = 1000000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// P(a, x) by its power series; converges quickly for x < a + 1.
double LowerSeries(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by its continued fraction (modified Lentz); for x >= a + 1.
double UpperFraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double RegularizedGammaQ(double a, double x) {
  ABCS_CHECK_MSG(a > 0 && x >= 0, "gamma Q domain: a=" << a << " x=" << x);
  if (x == 0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - LowerSeries(a, x);
  return UpperFraction(a, x);
}

double ChiSquaredSurvival(double statistic, double df) {
  ABCS_CHECK(df > 0);
  if (statistic <= 0) return 1.0;
  return RegularizedGammaQ(df / 2.0, statistic / 2.0);
}

ChiSquaredResult PearsonHomogeneity(std::span<const std::int64_t> first,
                                    std::span<const std::int64_t> second) {
  ABCS_CHECK(first.size() == second.size());
  double n1 = 0;
  double n2 = 0;
  for (std::size_t c = 0; c < first.size(); ++c) {
    n1 += first[c];
    n2 += second[c];
  }
  ABCS_CHECK_MSG(n1 > 0 && n2 > 0, "both halves must be non-empty");
  double n = n1 + n2;
  ChiSquaredResult out;
  int columns = 0;
  for (std::size_t c = 0; c < first.size(); ++c) {
    double total = static_cast<double>(first[c] + second[c]);
    if (total == 0) continue;
    ++columns;
    double e1 = n1 * total / n;
    double e2 = n2 * total / n;
    double d1 = first[c] - e1;
    double d2 = second[c] - e2;
    out.statistic += d1 * d1 / e1 + d2 * d2 / e2;
  }
  if (columns <= 1) return out;
  out.degrees_of_freedom = columns - 1;
  out.p_value = ChiSquaredSurvival(out.statistic, out.degrees_of_freedom);
  return out;
}

}  // namespace abcs
