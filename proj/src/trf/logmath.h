// trf/logmath.h
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

#ifndef TRF_LOGMATH_H_
#define TRF_LOGMATH_H_

#include <algorithm>
#include <cmath>
#include <span>

#include "trf/common.h"

namespace trf {

inline double StableSigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 + e^x) without overflow.
inline double Softplus(double x) {
  if (x > 35.0) return x;
  if (x < -35.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

// log sigmoid(x) = -softplus(-x).
inline double LogSigmoid(double x) { return -Softplus(-x); }

inline double LogSumExp(std::span<const double> xs) {
  TRF_CHECK(!xs.empty(), "logsumexp of nothing");
  double mx = *std::max_element(xs.begin(), xs.end());
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - mx);
  return mx + std::log(s);
}

// In-place softmax over logits; returns the log normalizer.
inline double SoftmaxInPlace(std::span<double> xs) {
  double mx = *std::max_element(xs.begin(), xs.end());
  double s = 0.0;
  for (double& x : xs) {
    x = std::exp(x - mx);
    s += x;
  }
  for (double& x : xs) x /= s;
  return mx + std::log(s);
}

}  // namespace trf

#endif  // TRF_LOGMATH_H_
