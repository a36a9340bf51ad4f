// trf/corpus.h
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

#ifndef TRF_CORPUS_H_
#define TRF_CORPUS_H_

#include <string>
#include <vector>

#include "trf/rng.h"
#include "trf/types.h"
#include "trf/vocab.h"

namespace trf {

// An encoded corpus. Sentences longer than max_length (and empty lines) are
// dropped at load time, not truncated.
struct Corpus {
  std::vector<Sentence> sentences;
  std::int64_t dropped_lines = 0;

  std::int64_t TotalTokens() const;
};

// One sentence per line, tokens separated by whitespace.
std::vector<std::vector<std::string>> ReadTokenLines(const std::string& path);

Corpus LoadCorpus(const std::string& path, const Vocabulary& vocab, int max_length);

// Exactly k sentences sampled uniformly with replacement.
std::vector<Sentence> DrawDataBatch(const std::vector<Sentence>& corpus, int k,
                                    Rng& rng);

// Iterations per epoch under with-replacement batching.
inline int IterationsPerEpoch(std::int64_t corpus_size, int batch_size) {
  return static_cast<int>((corpus_size + batch_size - 1) / batch_size);
}

}  // namespace trf

#endif  // TRF_CORPUS_H_
