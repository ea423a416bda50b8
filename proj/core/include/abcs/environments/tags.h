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

#ifndef ABCS_ENVIRONMENTS_TAGS_H_
#define ABCS_ENVIRONMENTS_TAGS_H_

#include <cstdint>

namespace abcs {

// First byte of every canonical and infostate key, one per rule set.
enum class GameTag : std::uint8_t {
  kWeightedRps = 1,
  kKuhn = 2,
  kLeduc = 3,
  kCartpole = 4,
  kStacked = 5,
  kTicTacToe = 6,
};

}  // namespace abcs

#endif  // ABCS_ENVIRONMENTS_TAGS_H_
