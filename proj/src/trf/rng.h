// trf/rng.h
//
// Copyright 2026  The trflm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the Apache 2 License for the specific language governing permissions
// and limitations under the License.

#ifndef TRF_RNG_H_
#define TRF_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace trf {

// Deterministic random stream. All draws are hand-rolled on top of the
// mt19937_64 word stream so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t NextU64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double NextUnit() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * NextUnit();
  }

  // Uniform in [0, n).
  int NextIndex(int n);

  // Index into an unnormalized nonnegative weight vector.
  int NextDiscrete(std::span<const double> weights);

 private:
  std::mt19937_64 gen_;
};

// Derives independent named streams from one master seed, so ablations can
// change one stream at a time.
class RngPool {
 public:
  explicit RngPool(std::uint64_t master_seed) : master_(master_seed) {}

  Rng Stream(std::string_view purpose) const;

  std::uint64_t master_seed() const { return master_; }

 private:
  std::uint64_t master_;
};

}  // namespace trf

#endif  // TRF_RNG_H_
