// trf/param_store.cc
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

#include "trf/param_store.h"

namespace trf {

int ParamStore::Add(const std::string& name, Tensor init) {
  TRF_CHECK(BlockIndex(name) < 0, "duplicate parameter block ", name);
  ParamBlock b;
  b.name = name;
  b.grad = init;
  b.grad.Zero();
  b.value = std::move(init);
  blocks_.push_back(std::move(b));
  return static_cast<int>(blocks_.size()) - 1;
}

int ParamStore::BlockIndex(const std::string& name) const {
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

ParamBlock& ParamStore::block(const std::string& name) {
  int i = BlockIndex(name);
  TRF_CHECK(i >= 0, "no parameter block named ", name);
  return blocks_[i];
}

const ParamBlock& ParamStore::block(const std::string& name) const {
  int i = BlockIndex(name);
  TRF_CHECK(i >= 0, "no parameter block named ", name);
  return blocks_[i];
}

std::int64_t ParamStore::TotalParams() const {
  std::int64_t n = 0;
  for (const auto& b : blocks_) n += b.value.size();
  return n;
}

void ParamStore::ZeroGrads() {
  for (auto& b : blocks_) b.grad.Zero();
}

bool ParamStore::GradsFinite() const {
  for (const auto& b : blocks_) {
    if (!b.grad.AllFinite()) return false;
  }
  return true;
}

void GradSink::MatchShapes(const ParamStore& shapes) {
  grads_.resize(shapes.num_blocks());
  for (int i = 0; i < shapes.num_blocks(); ++i) {
    const Tensor& v = shapes.block(i).value;
    grads_[i].Resize(v.rank(), v.rows(), v.cols());
    grads_[i].Zero();
  }
}

void GradSink::Zero() {
  for (auto& g : grads_) g.Zero();
}

void GradSink::AddFrom(const GradSink& other) {
  TRF_CHECK(num_blocks() == other.num_blocks(), "sink block count mismatch");
  for (int i = 0; i < num_blocks(); ++i) Axpy(1.0, other.grads_[i], grads_[i]);
}

void GradSink::MergeInto(ParamStore& store, double scale) const {
  TRF_CHECK(num_blocks() == store.num_blocks(), "sink/store block count mismatch");
  for (int i = 0; i < num_blocks(); ++i) Axpy(scale, grads_[i], store.block(i).grad);
}

bool GradSink::AllFinite() const {
  for (const auto& g : grads_) {
    if (!g.AllFinite()) return false;
  }
  return true;
}

}  // namespace trf
