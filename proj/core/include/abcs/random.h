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

#ifndef ABCS_RANDOM_H_
#define ABCS_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace abcs {

// Mixes a 64-bit value (splitmix64 finalizer). Used to derive independent
// stream seeds from one run seed.
std::uint64_t SplitMix64(std::uint64_t x);

// A seeded stream with a fixed, platform-independent double mapping
// (53 high bits of mt19937_64), so draw sequences are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(SplitMix64(seed ^ SplitMix64(stream + 0x9e3779b97f4a7c15ULL))) {}

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  int UniformInt(int n);

  // Index i with probability probs[i]; probs need not be normalized.
  int Sample(std::span<const double> probs);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Named stream ids. The learners draw chance and opponent moves from kWorld,
// traverser moves and exploration from kTrajectory, and stationarity-check
// coins from kDetector.
enum class Stream : std::uint64_t {
  kWorld = 1,
  kTrajectory = 2,
  kDetector = 3,
  kEvaluation = 4,
};

inline Rng MakeStream(std::uint64_t seed, Stream stream) {
  return Rng(seed, static_cast<std::uint64_t>(stream));
}

}  // namespace abcs

#endif  // ABCS_RANDOM_H_
