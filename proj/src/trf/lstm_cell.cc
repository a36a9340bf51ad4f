// trf/lstm_cell.cc
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

#include "trf/lstm_cell.h"

#include <cmath>

#include "trf/logmath.h"

namespace trf {

LstmCell AddLstmCell(ParamStore& store, const std::string& prefix, int input_dim,
                     int hidden_dim, Rng& rng) {
  LstmCell cell;
  cell.input_dim = input_dim;
  cell.hidden_dim = hidden_dim;

  Tensor w = Tensor::Matrix(4 * hidden_dim, input_dim);
  Tensor u = Tensor::Matrix(4 * hidden_dim, hidden_dim);
  Tensor b = Tensor::Vector(4 * hidden_dim);
  for (int i = 0; i < w.size(); ++i) w[i] = rng.NextUniform(-0.1, 0.1);
  for (int i = 0; i < u.size(); ++i) u[i] = rng.NextUniform(-0.1, 0.1);
  for (int i = 0; i < b.size(); ++i) b[i] = rng.NextUniform(-0.1, 0.1);
  for (int i = hidden_dim; i < 2 * hidden_dim; ++i) b[i] = 1.0;

  cell.w_block = store.Add(prefix + ".w", std::move(w));
  cell.u_block = store.Add(prefix + ".u", std::move(u));
  cell.b_block = store.Add(prefix + ".b", std::move(b));
  return cell;
}

void LstmStepFast(const ParamStore& store, const LstmCell& cell, const double* x,
                  double* h, double* c, double* pre) {
  const Tensor& w = store.block(cell.w_block).value;
  const Tensor& u = store.block(cell.u_block).value;
  const Tensor& b = store.block(cell.b_block).value;
  const int d = cell.hidden_dim;
  const int din = cell.input_dim;

  for (int r = 0; r < 4 * d; ++r) {
    const double* wr = w.data() + static_cast<size_t>(r) * din;
    const double* ur = u.data() + static_cast<size_t>(r) * d;
    double s = b[r];
    for (int j = 0; j < din; ++j) s += wr[j] * x[j];
    for (int j = 0; j < d; ++j) s += ur[j] * h[j];
    pre[r] = s;
  }
  for (int j = 0; j < d; ++j) {
    double ig = StableSigmoid(pre[j]);
    double fg = StableSigmoid(pre[d + j]);
    double gg = std::tanh(pre[2 * d + j]);
    double og = StableSigmoid(pre[3 * d + j]);
    double cj = fg * c[j] + ig * gg;
    c[j] = cj;
    h[j] = og * std::tanh(cj);
  }
}

Tape::Id LstmStepTape(Tape& tape, const LstmCell& cell, Tape::Id w, Tape::Id u,
                      Tape::Id b, Tape::Id x, Tape::Id* h, Tape::Id* c) {
  const int d = cell.hidden_dim;
  Tape::Id pre = tape.Add(tape.Add(tape.MatMul(w, x), tape.MatMul(u, *h)), b);
  Tape::Id ig = tape.Sigmoid(tape.Slice(pre, 0, d));
  Tape::Id fg = tape.Sigmoid(tape.Slice(pre, d, d));
  Tape::Id gg = tape.Tanh(tape.Slice(pre, 2 * d, d));
  Tape::Id og = tape.Sigmoid(tape.Slice(pre, 3 * d, d));
  Tape::Id c_new = tape.Add(tape.Mul(fg, *c), tape.Mul(ig, gg));
  Tape::Id h_new = tape.Mul(og, tape.Tanh(c_new));
  *c = c_new;
  *h = h_new;
  return h_new;
}

}  // namespace trf
