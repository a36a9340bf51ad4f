// trf/tensor.h
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

#ifndef TRF_TENSOR_H_
#define TRF_TENSOR_H_

#include <span>
#include <vector>

#include "trf/common.h"

namespace trf {

// Dense row-major 64-bit array of rank 1 or 2. Everything the recurrent
// potential and noise networks need fits in vectors and matrices.
class Tensor {
 public:
  Tensor() = default;

  static Tensor Vector(int n) { return Tensor(1, n, 1); }
  static Tensor Matrix(int rows, int cols) { return Tensor(2, rows, cols); }

  int rank() const { return rank_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }

  bool SameShape(const Tensor& o) const {
    return rank_ == o.rank_ && rows_ == o.rows_ && cols_ == o.cols_;
  }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  double& operator[](int i) { return v_[i]; }
  double operator[](int i) const { return v_[i]; }

  double& at(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

  std::span<double> Row(int r) {
    return {v_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::span<const double> Row(int r) const {
    return {v_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  std::span<double> Flat() { return {v_.data(), v_.size()}; }
  std::span<const double> Flat() const { return {v_.data(), v_.size()}; }

  void Fill(double x) { std::fill(v_.begin(), v_.end(), x); }
  void Zero() { Fill(0.0); }

  // Reshapes in place; keeps the underlying capacity so hot loops that
  // rebuild tapes of like-shaped nodes do not reallocate.
  void ResizeLike(const Tensor& o) { Resize(o.rank_, o.rows_, o.cols_); }
  void Resize(int rank, int rows, int cols) {
    rank_ = rank;
    rows_ = rows;
    cols_ = cols;
    v_.resize(static_cast<size_t>(rows) * cols);
  }

  bool AllFinite() const;

 private:
  Tensor(int rank, int rows, int cols) { Resize(rank, rows, cols); }

  std::vector<double> v_;
  int rank_ = 1;
  int rows_ = 0;
  int cols_ = 1;
};

// y += a * x, elementwise over equally shaped tensors.
void Axpy(double a, const Tensor& x, Tensor& y);

}  // namespace trf

#endif  // TRF_TENSOR_H_
