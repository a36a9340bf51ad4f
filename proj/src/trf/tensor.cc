// trf/tensor.cc
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

#include "trf/tensor.h"

#include <cmath>

namespace trf {

bool Tensor::AllFinite() const {
  for (double x : v_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void Axpy(double a, const Tensor& x, Tensor& y) {
  TRF_CHECK(x.SameShape(y), "axpy shape mismatch");
  const double* xs = x.data();
  double* ys = y.data();
  for (int i = 0, n = x.size(); i < n; ++i) ys[i] += a * xs[i];
}

}  // namespace trf
