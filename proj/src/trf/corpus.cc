// trf/corpus.cc
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

#include "trf/corpus.h"

#include <fstream>

namespace trf {

std::int64_t Corpus::TotalTokens() const {
  std::int64_t n = 0;
  for (const auto& s : sentences) n += static_cast<std::int64_t>(s.size());
  return n;
}

std::vector<std::vector<std::string>> ReadTokenLines(const std::string& path) {
  std::ifstream is(path);
  TRF_CHECK(is.good(), "cannot open corpus file ", path);
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(is, line)) {
    lines.push_back(SplitTokens(line));
  }
  return lines;
}

Corpus LoadCorpus(const std::string& path, const Vocabulary& vocab,
                  int max_length) {
  Corpus corpus;
  for (const auto& tokens : ReadTokenLines(path)) {
    if (tokens.empty() || static_cast<int>(tokens.size()) > max_length) {
      ++corpus.dropped_lines;
      continue;
    }
    corpus.sentences.push_back(Encode(tokens, vocab, max_length));
  }
  return corpus;
}

std::vector<Sentence> DrawDataBatch(const std::vector<Sentence>& corpus, int k,
                                    Rng& rng) {
  TRF_CHECK(!corpus.empty(), "cannot draw from an empty corpus");
  TRF_CHECK(k >= 1, "batch size must be >= 1");
  std::vector<Sentence> batch;
  batch.reserve(k);
  for (int i = 0; i < k; ++i) {
    batch.push_back(corpus[rng.NextIndex(static_cast<int>(corpus.size()))]);
  }
  return batch;
}

LengthPrior EmpiricalLengthPrior(const std::vector<Sentence>& corpus,
                                 int max_length) {
  TRF_CHECK(!corpus.empty(), "empty corpus has no length distribution");
  std::vector<double> probs(max_length, 0.0);
  for (const auto& s : corpus) {
    int l = static_cast<int>(s.size());
    TRF_CHECK(l >= 1 && l <= max_length, "sentence length ", l, " out of range");
    probs[l - 1] += 1.0;
  }
  for (double& p : probs) p /= static_cast<double>(corpus.size());
  return LengthPrior(std::move(probs));
}

}  // namespace trf
