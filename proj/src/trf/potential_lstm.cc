// trf/potential_lstm.cc
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

#include "trf/potential_lstm.h"

#include <cstring>

namespace trf {

void Potential::CheckLength(const Sentence& s) const {
  int l = static_cast<int>(s.size());
  if (l < 1 || l > max_length()) {
    throw LengthError(StrCat("sentence length ", l, " outside 1..", max_length()));
  }
  for (TokenId id : s) {
    TRF_CHECK(id >= 0 && id < vocab_size(), "token id ", id, " out of range");
  }
}

BiRecurrentPotential::BiRecurrentPotential(ParamStore& store, int vocab_size,
                                           int embed_dim, int max_length, Rng& rng)
    : store_(store),
      vocab_size_(vocab_size),
      embed_dim_(embed_dim),
      max_length_(max_length) {
  Tensor emb = Tensor::Matrix(vocab_size, embed_dim);
  for (int i = 0; i < emb.size(); ++i) emb[i] = rng.NextUniform(-0.1, 0.1);
  emb_block_ = store_.Add("emb", std::move(emb));
  fwd_ = AddLstmCell(store_, "fwd", embed_dim, embed_dim, rng);
  bwd_ = AddLstmCell(store_, "bwd", embed_dim, embed_dim, rng);
}

BiRecurrentPotential::BiRecurrentPotential(ParamStore& store, int vocab_size,
                                           int embed_dim, int max_length)
    : store_(store),
      vocab_size_(vocab_size),
      embed_dim_(embed_dim),
      max_length_(max_length) {
  Attach();
}

void BiRecurrentPotential::Attach() {
  emb_block_ = store_.BlockIndex("emb");
  TRF_CHECK(emb_block_ >= 0, "store has no embedding block");
  for (auto [cell, prefix] : {std::pair{&fwd_, "fwd"}, std::pair{&bwd_, "bwd"}}) {
    cell->w_block = store_.BlockIndex(StrCat(prefix, ".w"));
    cell->u_block = store_.BlockIndex(StrCat(prefix, ".u"));
    cell->b_block = store_.BlockIndex(StrCat(prefix, ".b"));
    TRF_CHECK(cell->w_block >= 0 && cell->u_block >= 0 && cell->b_block >= 0,
              "store is missing ", prefix, " cell blocks");
    cell->input_dim = embed_dim_;
    cell->hidden_dim = embed_dim_;
  }
  const Tensor& emb = store_.block(emb_block_).value;
  TRF_CHECK(emb.rows() == vocab_size_ && emb.cols() == embed_dim_,
            "embedding block shape mismatch");
}

double BiRecurrentPotential::Phi(const Sentence& s, PhiScratch& scratch) const {
  CheckLength(s);
  const int l = static_cast<int>(s.size());
  if (l == 1) return 0.0;

  const int d = embed_dim_;
  const Tensor& emb = store_.block(emb_block_).value;
  double* mem = scratch.Buffer(static_cast<size_t>(6) * d);
  double* h = mem;
  double* c = mem + d;
  double* pre = mem + 2 * d;

  auto row = [&](int pos) { return emb.data() + static_cast<size_t>(s[pos]) * d; };

  double phi = 0.0;
  std::memset(h, 0, sizeof(double) * d);
  std::memset(c, 0, sizeof(double) * d);
  for (int i = 0; i + 1 < l; ++i) {
    LstmStepFast(store_, fwd_, row(i), h, c, pre);
    const double* e_next = row(i + 1);
    double dot = 0.0;
    for (int j = 0; j < d; ++j) dot += h[j] * e_next[j];
    phi += dot;
  }
  std::memset(h, 0, sizeof(double) * d);
  std::memset(c, 0, sizeof(double) * d);
  for (int i = l - 1; i >= 1; --i) {
    LstmStepFast(store_, bwd_, row(i), h, c, pre);
    const double* e_prev = row(i - 1);
    double dot = 0.0;
    for (int j = 0; j < d; ++j) dot += h[j] * e_prev[j];
    phi += dot;
  }
  return phi;
}

double BiRecurrentPotential::PhiWithGrad(const Sentence& s, double weight,
                                         GradSink& sink, PhiScratch& scratch) const {
  CheckLength(s);
  const int l = static_cast<int>(s.size());
  if (l == 1) return 0.0;

  Tape& tape = scratch.tape;
  tape.Reset();
  tape.Bind(&store_);

  Tape::Id emb = tape.Param(emb_block_);
  Tape::Id fw = tape.Param(fwd_.w_block);
  Tape::Id fu = tape.Param(fwd_.u_block);
  Tape::Id fb = tape.Param(fwd_.b_block);
  Tape::Id bw = tape.Param(bwd_.w_block);
  Tape::Id bu = tape.Param(bwd_.u_block);
  Tape::Id bb = tape.Param(bwd_.b_block);

  std::vector<Tape::Id> e(l);
  for (int i = 0; i < l; ++i) e[i] = tape.EmbedRow(emb, s[i]);

  std::vector<Tape::Id> terms;
  terms.reserve(2 * (l - 1));
  Tape::Id h = tape.ZeroVector(embed_dim_);
  Tape::Id c = tape.ZeroVector(embed_dim_);
  for (int i = 0; i + 1 < l; ++i) {
    LstmStepTape(tape, fwd_, fw, fu, fb, e[i], &h, &c);
    terms.push_back(tape.Dot(h, e[i + 1]));
  }
  h = tape.ZeroVector(embed_dim_);
  c = tape.ZeroVector(embed_dim_);
  for (int i = l - 1; i >= 1; --i) {
    LstmStepTape(tape, bwd_, bw, bu, bb, e[i], &h, &c);
    terms.push_back(tape.Dot(h, e[i - 1]));
  }
  Tape::Id phi = tape.Sum(terms);
  tape.Backward(phi, sink, weight);
  return tape.scalar(phi);
}

void BiRecurrentPotential::HiddenStates(const Sentence& s, Tensor* fwd,
                                        Tensor* bwd) const {
  CheckLength(s);
  const int l = static_cast<int>(s.size());
  const int d = embed_dim_;
  const Tensor& emb = store_.block(emb_block_).value;
  fwd->Resize(2, l, d);
  bwd->Resize(2, l, d);

  std::vector<double> h(d, 0.0), c(d, 0.0), pre(4 * d);
  for (int i = 0; i < l; ++i) {
    LstmStepFast(store_, fwd_, emb.data() + static_cast<size_t>(s[i]) * d, h.data(),
                 c.data(), pre.data());
    std::memcpy(fwd->data() + static_cast<size_t>(i) * d, h.data(),
                sizeof(double) * d);
  }
  std::fill(h.begin(), h.end(), 0.0);
  std::fill(c.begin(), c.end(), 0.0);
  for (int i = l - 1; i >= 0; --i) {
    LstmStepFast(store_, bwd_, emb.data() + static_cast<size_t>(s[i]) * d, h.data(),
                 c.data(), pre.data());
    std::memcpy(bwd->data() + static_cast<size_t>(i) * d, h.data(),
                sizeof(double) * d);
  }
}

}  // namespace trf
