// trf/sentence_space.h
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

#ifndef TRF_SENTENCE_SPACE_H_
#define TRF_SENTENCE_SPACE_H_

#include <string>
#include <vector>

#include "trf/rng.h"
#include "trf/types.h"

namespace trf {

// Enumerates every sentence (l, x^l) with 1 <= l <= max_length over a
// vocabulary of the given size. Sentences of one length are ranked in
// mixed-radix (lexicographic) order; lengths are laid out consecutively.
class SentenceSpace {
 public:
  SentenceSpace(int vocab_size, int max_length);

  int vocab_size() const { return vocab_size_; }
  int max_length() const { return max_length_; }

  std::int64_t size() const { return offsets_.back(); }
  std::int64_t CountForLength(int l) const;
  std::int64_t OffsetForLength(int l) const;

  std::int64_t IndexOf(const Sentence& s) const;
  Sentence At(std::int64_t index) const;
  void DecodeAt(std::int64_t index, Sentence* out) const;

 private:
  int vocab_size_;
  int max_length_;
  std::vector<std::int64_t> offsets_;  // offsets_[l] = first index of length l+1
};

// A normalized distribution over a SentenceSpace; the exact-enumeration
// object the divergence oracles and consistency tests work with.
class TabularDistribution {
 public:
  TabularDistribution(SentenceSpace space, std::vector<double> probs);

  // Probabilities proportional to -log(u), u ~ U(0,1): positive everywhere.
  static TabularDistribution Random(int vocab_size, int max_length, Rng& rng);

  // Normalized empirical distribution of a sentence collection.
  static TabularDistribution Empirical(int vocab_size, int max_length,
                                       const std::vector<Sentence>& corpus);

  const SentenceSpace& space() const { return space_; }
  const std::vector<double>& probs() const { return probs_; }

  double prob(std::int64_t index) const { return probs_[index]; }
  double prob(const Sentence& s) const { return probs_[space_.IndexOf(s)]; }

  LengthPrior LengthMarginal() const;

  Sentence Sample(Rng& rng) const;

 private:
  SentenceSpace space_;
  std::vector<double> probs_;
  std::vector<double> cdf_;

  void BuildCdf();
};

// JSON serialization (entries of ids and probabilities).
void WriteDistribution(const TabularDistribution& dist, const std::string& path);
TabularDistribution ReadDistribution(const std::string& path);

}  // namespace trf

#endif  // TRF_SENTENCE_SPACE_H_
