// trf/tape.h
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

#ifndef TRF_TAPE_H_
#define TRF_TAPE_H_

#include <span>
#include <vector>

#include "trf/param_store.h"

namespace trf {

// Reverse-mode differentiation over a recorded sequence of primitives.
//
// A tape is single-threaded. Values are computed eagerly as operations are
// recorded; Backward() walks the record once in reverse and accumulates
// d(output)/d(param) into a GradSink aligned with the bound ParamStore.
// Reset() keeps node storage so per-sentence graphs rebuilt in a loop do not
// reallocate once shapes have stabilized.
class Tape {
 public:
  using Id = std::int32_t;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  void Bind(const ParamStore* store) { store_ = store; }
  void Reset();

  // Leaves.
  Id Constant(const Tensor& v);      // no gradient tracked
  Id ZeroVector(int n);              // constant zeros (initial recurrent state)
  Id Param(int block_index);         // references the bound store's block value

  // Primitives. Shapes are checked at recording time.
  Id MatMul(Id a, Id b);             // (r x k)(k x c) or (r x k)(k-vector)
  Id Add(Id a, Id b);                // same shape
  Id Mul(Id a, Id b);                // elementwise, same shape
  Id Sigmoid(Id a);
  Id Tanh(Id a);
  Id Dot(Id a, Id b);                // inner product of equal-size vectors
  Id EmbedRow(Id table, int row);    // matrix row lookup
  Id Slice(Id a, int offset, int len);
  Id Sum(std::span<const Id> ids);   // elementwise sum of same-shape values
  Id LogSoftmaxPick(Id logits, int index);  // log softmax(logits)[index]

  const Tensor& value(Id id) const;
  double scalar(Id id) const;

  // Accumulates seed * d(value(output))/d(param) into sink[param block].
  // Gradients add across calls; callers zero the sink when they need a
  // fresh accumulation.
  void Backward(Id output, GradSink& sink, double seed = 1.0);

  int num_nodes() const { return used_; }

 private:
  enum class Op : std::uint8_t {
    kConstant,
    kParam,
    kMatMul,
    kAdd,
    kMul,
    kSigmoid,
    kTanh,
    kDot,
    kEmbedRow,
    kSlice,
    kSum,
    kLogSoftmaxPick,
  };

  struct Node {
    Op op = Op::kConstant;
    Id a = -1;
    Id b = -1;
    int aux = 0;        // row index / slice offset / pick index / block index
    int aux2 = 0;       // slice length / sum arity
    int args_off = 0;   // first index into args_ for kSum
    const Tensor* ext = nullptr;  // external value for kParam
    Tensor val;
    Tensor adj;
    Tensor cache;       // softmax cache for kLogSoftmaxPick
  };

  Node& NewNode(Op op);
  const Tensor& val_of(const Node& n) const { return n.ext ? *n.ext : n.val; }

  const ParamStore* store_ = nullptr;
  std::vector<Node> nodes_;
  std::vector<Id> args_;
  int used_ = 0;
  int args_used_ = 0;
};

}  // namespace trf

#endif  // TRF_TAPE_H_
