// trf/potential_lstm.h
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

#ifndef TRF_POTENTIAL_LSTM_H_
#define TRF_POTENTIAL_LSTM_H_

#include "trf/lstm_cell.h"
#include "trf/potential.h"

namespace trf {

// Bidirectional recurrent potential: a shared embedding table feeds forward
// and backward gated recurrent cells of the same hidden size, and
//
//   phi(x^l) = sum_{i=1}^{l-1} h_fwd_i . e_{i+1} + sum_{i=2}^{l} h_bwd_i . e_{i-1}
//
// The same embedding rows serve as network inputs and as the e vectors in
// the inner products. Any length-1 sentence scores exactly 0.
class BiRecurrentPotential : public Potential {
 public:
  // Registers blocks "emb", "fwd.{w,u,b}", "bwd.{w,u,b}" in `store`.
  // Weights are initialized uniformly in [-0.1, 0.1] from `rng`
  // (forget-gate biases at 1).
  BiRecurrentPotential(ParamStore& store, int vocab_size, int embed_dim,
                       int max_length, Rng& rng);

  // Attaches to existing blocks (checkpoint restore).
  BiRecurrentPotential(ParamStore& store, int vocab_size, int embed_dim,
                       int max_length);

  const std::string& kind() const override { return kind_; }
  static constexpr const char* kKind = "bi_recurrent";

  int vocab_size() const override { return vocab_size_; }
  int max_length() const override { return max_length_; }
  int embed_dim() const { return embed_dim_; }

  double Phi(const Sentence& s, PhiScratch& scratch) const override;
  double PhiWithGrad(const Sentence& s, double weight, GradSink& sink,
                     PhiScratch& scratch) const override;

  // All forward/backward hidden states, row i-1 = state at position i.
  // Exposed for the causality checks.
  void HiddenStates(const Sentence& s, Tensor* fwd, Tensor* bwd) const;

 private:
  void Attach();

  ParamStore& store_;
  std::string kind_ = kKind;
  int vocab_size_;
  int embed_dim_;
  int max_length_;
  int emb_block_ = -1;
  LstmCell fwd_;
  LstmCell bwd_;
};

}  // namespace trf

#endif  // TRF_POTENTIAL_LSTM_H_
