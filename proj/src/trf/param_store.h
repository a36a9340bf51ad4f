// trf/param_store.h
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

#ifndef TRF_PARAM_STORE_H_
#define TRF_PARAM_STORE_H_

#include <string>
#include <vector>

#include "trf/tensor.h"

namespace trf {

// A named parameter block with its gradient accumulator of equal shape.
struct ParamBlock {
  std::string name;
  Tensor value;
  Tensor grad;
};

class ParamStore {
 public:
  // Adds a block initialized to `init`; the gradient starts at zero.
  // Names must be unique.
  int Add(const std::string& name, Tensor init);

  int BlockIndex(const std::string& name) const;  // -1 if absent

  ParamBlock& block(int i) { return blocks_[i]; }
  const ParamBlock& block(int i) const { return blocks_[i]; }

  ParamBlock& block(const std::string& name);
  const ParamBlock& block(const std::string& name) const;

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  std::vector<ParamBlock>& blocks() { return blocks_; }
  const std::vector<ParamBlock>& blocks() const { return blocks_; }

  std::int64_t TotalParams() const;

  void ZeroGrads();
  bool GradsFinite() const;

 private:
  std::vector<ParamBlock> blocks_;
};

// Per-block gradient accumulators mirroring a ParamStore's shapes. Chunked
// parallel drivers give each chunk its own sink and merge the sinks into the
// store in fixed chunk order, keeping results independent of worker count.
class GradSink {
 public:
  GradSink() = default;
  explicit GradSink(const ParamStore& shapes) { MatchShapes(shapes); }

  void MatchShapes(const ParamStore& shapes);
  void Zero();

  Tensor& operator[](int block) { return grads_[block]; }
  const Tensor& operator[](int block) const { return grads_[block]; }
  int num_blocks() const { return static_cast<int>(grads_.size()); }

  void AddFrom(const GradSink& other);
  // store.grad[b] += scale * this[b] for every block.
  void MergeInto(ParamStore& store, double scale = 1.0) const;

  bool AllFinite() const;

 private:
  std::vector<Tensor> grads_;
};

}  // namespace trf

#endif  // TRF_PARAM_STORE_H_
