// trf/finite_diff.cc
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

#include "trf/finite_diff.h"

#include <cmath>

namespace trf {

std::string FiniteDiffReport::Summary() const {
  return StrCat(passed ? "PASS" : "FAIL", " max_rel_err=", max_rel_err,
                " over ", coords_checked, " coords; worst ", worst_block, "[",
                worst_index, "] analytic=", worst_analytic,
                " numeric=", worst_numeric);
}

FiniteDiffReport FiniteDiffCheck(ParamStore& params,
                                 const std::function<double()>& eval,
                                 const std::function<void(GradSink&)>& analytic_grad,
                                 const FiniteDiffOptions& opts) {
  TRF_CHECK(opts.h > 0.0, "finite-difference step must be positive");
  GradSink analytic(params);
  analytic_grad(analytic);

  FiniteDiffReport report;
  for (int b = 0; b < params.num_blocks(); ++b) {
    ParamBlock& block = params.block(b);
    for (int i = 0; i < block.value.size(); ++i) {
      double saved = block.value[i];
      block.value[i] = saved + opts.h;
      double f_plus = eval();
      block.value[i] = saved - opts.h;
      double f_minus = eval();
      block.value[i] = saved;
      if (!std::isfinite(f_plus) || !std::isfinite(f_minus)) {
        Fail("non-finite objective while perturbing ", block.name, "[", i, "]");
      }
      double numeric = (f_plus - f_minus) / (2.0 * opts.h);
      double a = analytic[b][i];
      double denom = std::max({std::fabs(numeric), std::fabs(a), opts.denom_floor});
      double rel = std::fabs(numeric - a) / denom;
      ++report.coords_checked;
      if (rel >= report.max_rel_err) {
        report.max_rel_err = rel;
        report.worst_block = block.name;
        report.worst_index = i;
        report.worst_analytic = a;
        report.worst_numeric = numeric;
      }
    }
  }
  report.passed = report.max_rel_err <= opts.tol;
  return report;
}

}  // namespace trf
