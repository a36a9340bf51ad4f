// trf/lstm_cell.h
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

#ifndef TRF_LSTM_CELL_H_
#define TRF_LSTM_CELL_H_

#include <string>

#include "trf/param_store.h"
#include "trf/rng.h"
#include "trf/tape.h"

namespace trf {

// One gated recurrent cell: input/forget/output gates and a tanh candidate,
// gates packed row-wise as [i, f, g, o] in W (4h x in), U (4h x h), b (4h).
struct LstmCell {
  int w_block = -1;
  int u_block = -1;
  int b_block = -1;
  int input_dim = 0;
  int hidden_dim = 0;
};

// Adds the cell's blocks (<prefix>.w/.u/.b) to the store. Weights are
// initialized uniformly in [-0.1, 0.1]; the forget-gate bias starts at 1.
LstmCell AddLstmCell(ParamStore& store, const std::string& prefix, int input_dim,
                     int hidden_dim, Rng& rng);

// Fast tape-free step: consumes x, updates h and c in place.
// pre must hold 4*hidden_dim scratch doubles.
void LstmStepFast(const ParamStore& store, const LstmCell& cell, const double* x,
                  double* h, double* c, double* pre);

// Taped step; replaces *h and *c with the new state ids and returns *h.
Tape::Id LstmStepTape(Tape& tape, const LstmCell& cell, Tape::Id w, Tape::Id u,
                      Tape::Id b, Tape::Id x, Tape::Id* h, Tape::Id* c);

}  // namespace trf

#endif  // TRF_LSTM_CELL_H_
