// trf/nbest.h
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

#ifndef TRF_NBEST_H_
#define TRF_NBEST_H_

#include <map>
#include <string>
#include <vector>

#include "trf/rng.h"
#include "trf/types.h"
#include "trf/vocab.h"

namespace trf {

struct NBestEntry {
  std::string utt;
  std::vector<std::vector<std::string>> hyps;
};

struct NBestList {
  std::vector<NBestEntry> entries;

  int FindUtt(const std::string& utt) const;  // -1 if absent
};

// One hypothesis per line: `<utterance-id> <token> <token> ...`.
// Hypotheses of one utterance must be contiguous; ids must be unique.
NBestList ReadNBest(const std::string& path);
void WriteNBest(const NBestList& list, const std::string& path);

// Hypothesis scores keyed by (utterance id, hypothesis index), natural log.
// File lines: `<utterance-id> <hypothesis-index> <score>`.
using ScoreTable = std::map<std::pair<std::string, int>, double>;

ScoreTable ReadScoreFile(const std::string& path);
void WriteScoreFile(const ScoreTable& scores, const std::string& path);

struct FakeNBest {
  NBestList nbest;
  std::vector<NBestEntry> references;  // one hypothesis each
};

// Selects n_sentences references from the corpus (without replacement) and
// emits, per reference, the reference itself plus n_alternatives variants
// corrupted by substitution/insertion/deletion of vocabulary tokens. Each
// variant receives between min_errors and max_errors edits. Edits never
// empty a hypothesis and never push it past max_length, so every hypothesis
// stays scorable.
FakeNBest MakeFakeNBest(const std::vector<Sentence>& corpus, const Vocabulary& vocab,
                        int n_sentences, int min_errors, int max_errors,
                        int n_alternatives, int max_length, Rng& rng);

}  // namespace trf

#endif  // TRF_NBEST_H_
