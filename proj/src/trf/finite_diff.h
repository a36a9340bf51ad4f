// trf/finite_diff.h
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

#ifndef TRF_FINITE_DIFF_H_
#define TRF_FINITE_DIFF_H_

#include <functional>
#include <string>

#include "trf/param_store.h"

namespace trf {

struct FiniteDiffOptions {
  double h = 1e-5;
  double tol = 1e-4;
  // Relative error denominator floor; coordinates whose analytic and numeric
  // gradients are both below this are compared absolutely against it.
  double denom_floor = 1e-4;
};

struct FiniteDiffReport {
  double max_rel_err = 0.0;
  std::string worst_block;
  int worst_index = -1;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::int64_t coords_checked = 0;
  bool passed = false;

  std::string Summary() const;
};

// Central-difference check of an analytic gradient, coordinate by coordinate.
// `eval` returns the scalar objective at the store's current values and must
// be deterministic; `analytic_grad` accumulates the full gradient into a
// zeroed sink. Throws if `eval` produces a non-finite value.
FiniteDiffReport FiniteDiffCheck(ParamStore& params,
                                 const std::function<double()>& eval,
                                 const std::function<void(GradSink&)>& analytic_grad,
                                 const FiniteDiffOptions& opts = {});

}  // namespace trf

#endif  // TRF_FINITE_DIFF_H_
