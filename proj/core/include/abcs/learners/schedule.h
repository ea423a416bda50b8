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

#ifndef ABCS_LEARNERS_SCHEDULE_H_
#define ABCS_LEARNERS_SCHEDULE_H_

#include <cmath>
#include <cstdint>
#include <string>

namespace abcs {

// scale * decay^floor(n / period).
struct Schedule {
  double scale = 1.0;
  double decay = 1.0;
  std::int64_t period = 1;

  double operator()(std::int64_t n) const {
    return scale * std::pow(decay, static_cast<double>(n / period));
  }
  std::string ToString() const;
};

}  // namespace abcs

#endif  // ABCS_LEARNERS_SCHEDULE_H_
