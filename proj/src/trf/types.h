// trf/types.h
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

#ifndef TRF_TYPES_H_
#define TRF_TYPES_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "trf/common.h"

namespace trf {

using TokenId = std::int32_t;

// A sentence is the token-id sequence; its length l is size().
using Sentence = std::vector<TokenId>;

// Length distribution pi_1..pi_m. probs[l-1] is the probability of length l.
class LengthPrior {
 public:
  LengthPrior() = default;
  explicit LengthPrior(std::vector<double> probs) : probs_(std::move(probs)) {
    Validate();
  }

  int max_length() const { return static_cast<int>(probs_.size()); }

  double prob(int length) const {
    if (length < 1 || length > max_length()) return 0.0;
    return probs_[length - 1];
  }

  double log_prob(int length) const {
    double p = prob(length);
    return p > 0.0 ? std::log(p) : kNegInf;
  }

  bool in_support(int length) const { return prob(length) > 0.0; }

  const std::vector<double>& probs() const { return probs_; }

  void Validate() const {
    double sum = 0.0;
    for (double p : probs_) {
      TRF_CHECK(p >= 0.0 && std::isfinite(p), "length prior entry out of range");
      sum += p;
    }
    TRF_CHECK(std::fabs(sum - 1.0) <= 1e-12, "length prior sums to ", sum);
  }

 private:
  std::vector<double> probs_;
};

// pi_l = (#sentences of length l) / (#sentences), lengths 1..m.
LengthPrior EmpiricalLengthPrior(const std::vector<Sentence>& corpus, int max_length);

}  // namespace trf

#endif  // TRF_TYPES_H_
