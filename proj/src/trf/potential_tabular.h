// trf/potential_tabular.h
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

#ifndef TRF_POTENTIAL_TABULAR_H_
#define TRF_POTENTIAL_TABULAR_H_

#include "trf/potential.h"
#include "trf/sentence_space.h"

namespace trf {

// One weight per enumerable sentence; the unlimited-capacity potential used
// by the estimator consistency oracles. d phi / d w is one-hot at the
// sentence's entry.
class TabularPotential : public Potential {
 public:
  // Registers block "table" (all zeros) in `store`.
  TabularPotential(ParamStore& store, int vocab_size, int max_length);

  const std::string& kind() const override { return kind_; }
  static constexpr const char* kKind = "tabular";

  int vocab_size() const override { return space_.vocab_size(); }
  int max_length() const override { return space_.max_length(); }
  const SentenceSpace& space() const { return space_; }

  double Phi(const Sentence& s, PhiScratch& scratch) const override;
  double PhiWithGrad(const Sentence& s, double weight, GradSink& sink,
                     PhiScratch& scratch) const override;

  std::span<double> weights() { return store_.block(table_block_).value.Flat(); }
  std::span<const double> weights() const {
    return store_.block(table_block_).value.Flat();
  }

 private:
  ParamStore& store_;
  std::string kind_ = kKind;
  SentenceSpace space_;
  int table_block_ = -1;
};

}  // namespace trf

#endif  // TRF_POTENTIAL_TABULAR_H_
