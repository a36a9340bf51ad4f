// trf/rng.cc
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

#include "trf/rng.h"

#include "trf/common.h"

namespace trf {

int Rng::NextIndex(int n) {
  TRF_CHECK(n > 0);
  // Multiply-shift map of the 64-bit word onto [0, n); bias is below 2^-32
  // for any n that fits an int.
  unsigned __int128 prod =
      static_cast<unsigned __int128>(NextU64()) * static_cast<std::uint64_t>(n);
  return static_cast<int>(prod >> 64);
}

int Rng::NextDiscrete(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  TRF_CHECK(total > 0.0, "discrete draw over zero-mass weights");
  double u = NextUnit() * total;
  double acc = 0.0;
  for (size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

namespace {
// SplitMix64; used to hash (master seed, purpose) into a stream seed.
std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Rng RngPool::Stream(std::string_view purpose) const {
  std::uint64_t h = Mix(master_);
  for (char c : purpose) {
    h = Mix(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  }
  return Rng(h);
}

}  // namespace trf
