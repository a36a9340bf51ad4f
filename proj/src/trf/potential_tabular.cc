// trf/potential_tabular.cc
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

#include "trf/potential_tabular.h"

namespace trf {

TabularPotential::TabularPotential(ParamStore& store, int vocab_size,
                                   int max_length)
    : store_(store), space_(vocab_size, max_length) {
  if (int existing = store_.BlockIndex("table"); existing >= 0) {
    table_block_ = existing;
    TRF_CHECK(store_.block(existing).value.size() == space_.size(),
              "table block size mismatch");
  } else {
    Tensor t = Tensor::Vector(static_cast<int>(space_.size()));
    t.Zero();
    table_block_ = store_.Add("table", std::move(t));
  }
}

double TabularPotential::Phi(const Sentence& s, PhiScratch&) const {
  CheckLength(s);
  return store_.block(table_block_).value[static_cast<int>(space_.IndexOf(s))];
}

double TabularPotential::PhiWithGrad(const Sentence& s, double weight,
                                     GradSink& sink, PhiScratch&) const {
  CheckLength(s);
  std::int64_t idx = space_.IndexOf(s);
  sink[table_block_][static_cast<int>(idx)] += weight;
  return store_.block(table_block_).value[static_cast<int>(idx)];
}

}  // namespace trf
