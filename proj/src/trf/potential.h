// trf/potential.h
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

#ifndef TRF_POTENTIAL_H_
#define TRF_POTENTIAL_H_

#include <memory>
#include <string>
#include <vector>

#include "trf/param_store.h"
#include "trf/tape.h"
#include "trf/types.h"

namespace trf {

// Reusable per-caller workspace. Evaluations are const and thread-safe as
// long as each thread passes its own scratch.
struct PhiScratch {
  Tape tape;
  std::vector<double> buf;

  double* Buffer(size_t n) {
    if (buf.size() < n) buf.resize(n);
    return buf.data();
  }
};

// Unnormalized log-score phi(x^l; theta). Parameters live in an external
// ParamStore shared with the rest of theta-hat, so trainers stay
// potential-agnostic.
class Potential {
 public:
  virtual ~Potential() = default;

  virtual const std::string& kind() const = 0;
  virtual int vocab_size() const = 0;
  virtual int max_length() const = 0;

  virtual double Phi(const Sentence& s, PhiScratch& scratch) const = 0;

  // Accumulates weight * d phi / d theta into the sink (aligned with the
  // owning store) and returns phi.
  virtual double PhiWithGrad(const Sentence& s, double weight, GradSink& sink,
                             PhiScratch& scratch) const = 0;

  double Phi(const Sentence& s) const {
    PhiScratch scratch;
    return Phi(s, scratch);
  }

 protected:
  void CheckLength(const Sentence& s) const;
};

}  // namespace trf

#endif  // TRF_POTENTIAL_H_
