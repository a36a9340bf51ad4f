// trf/sentence_space.cc
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

#include "trf/sentence_space.h"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace trf {

SentenceSpace::SentenceSpace(int vocab_size, int max_length)
    : vocab_size_(vocab_size), max_length_(max_length) {
  TRF_CHECK(vocab_size >= 1 && max_length >= 1, "bad sentence space");
  offsets_.assign(max_length + 1, 0);
  std::int64_t count = 1;
  for (int l = 1; l <= max_length; ++l) {
    TRF_CHECK(count < (std::int64_t{1} << 56) / vocab_size,
              "sentence space too large to enumerate");
    count *= vocab_size;
    offsets_[l] = offsets_[l - 1] + count;
  }
}

std::int64_t SentenceSpace::CountForLength(int l) const {
  TRF_CHECK(l >= 1 && l <= max_length_, "length ", l, " out of range");
  return offsets_[l] - offsets_[l - 1];
}

std::int64_t SentenceSpace::OffsetForLength(int l) const {
  TRF_CHECK(l >= 1 && l <= max_length_, "length ", l, " out of range");
  return offsets_[l - 1];
}

std::int64_t SentenceSpace::IndexOf(const Sentence& s) const {
  int l = static_cast<int>(s.size());
  TRF_CHECK(l >= 1 && l <= max_length_, "length ", l, " out of range");
  std::int64_t rank = 0;
  for (TokenId id : s) {
    TRF_CHECK(id >= 0 && id < vocab_size_, "token id out of range");
    rank = rank * vocab_size_ + id;
  }
  return offsets_[l - 1] + rank;
}

Sentence SentenceSpace::At(std::int64_t index) const {
  Sentence s;
  DecodeAt(index, &s);
  return s;
}

void SentenceSpace::DecodeAt(std::int64_t index, Sentence* out) const {
  TRF_CHECK(index >= 0 && index < size(), "sentence index out of range");
  int l = 1;
  while (index >= offsets_[l]) ++l;
  std::int64_t rank = index - offsets_[l - 1];
  out->resize(l);
  for (int i = l - 1; i >= 0; --i) {
    (*out)[i] = static_cast<TokenId>(rank % vocab_size_);
    rank /= vocab_size_;
  }
}

TabularDistribution::TabularDistribution(SentenceSpace space,
                                         std::vector<double> probs)
    : space_(space), probs_(std::move(probs)) {
  TRF_CHECK(static_cast<std::int64_t>(probs_.size()) == space_.size(),
            "probability vector does not cover the sentence space");
  double sum = 0.0;
  for (double p : probs_) {
    TRF_CHECK(p >= 0.0 && std::isfinite(p), "bad probability entry");
    sum += p;
  }
  TRF_CHECK(sum > 0.0, "distribution has no mass");
  for (double& p : probs_) p /= sum;
  BuildCdf();
}

TabularDistribution TabularDistribution::Random(int vocab_size, int max_length,
                                                Rng& rng) {
  SentenceSpace space(vocab_size, max_length);
  std::vector<double> probs(space.size());
  for (auto& p : probs) p = -std::log(1.0 - rng.NextUnit());
  return TabularDistribution(space, std::move(probs));
}

TabularDistribution TabularDistribution::Empirical(
    int vocab_size, int max_length, const std::vector<Sentence>& corpus) {
  SentenceSpace space(vocab_size, max_length);
  std::vector<double> probs(space.size(), 0.0);
  TRF_CHECK(!corpus.empty(), "empty corpus");
  for (const auto& s : corpus) probs[space.IndexOf(s)] += 1.0;
  return TabularDistribution(space, std::move(probs));
}

LengthPrior TabularDistribution::LengthMarginal() const {
  std::vector<double> pi(space_.max_length(), 0.0);
  for (int l = 1; l <= space_.max_length(); ++l) {
    std::int64_t off = space_.OffsetForLength(l);
    std::int64_t cnt = space_.CountForLength(l);
    double s = 0.0;
    for (std::int64_t i = 0; i < cnt; ++i) s += probs_[off + i];
    pi[l - 1] = s;
  }
  // Guard the sum-to-one invariant against accumulation drift.
  double total = 0.0;
  for (double p : pi) total += p;
  for (double& p : pi) p /= total;
  return LengthPrior(std::move(pi));
}

void TabularDistribution::BuildCdf() {
  cdf_.resize(probs_.size());
  double acc = 0.0;
  for (size_t i = 0; i < probs_.size(); ++i) {
    acc += probs_[i];
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;
}

Sentence TabularDistribution::Sample(Rng& rng) const {
  double u = rng.NextUnit();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  std::int64_t idx = it == cdf_.end() ? static_cast<std::int64_t>(cdf_.size()) - 1
                                      : it - cdf_.begin();
  return space_.At(idx);
}

void WriteDistribution(const TabularDistribution& dist, const std::string& path) {
  nlohmann::json j;
  j["vocab_size"] = dist.space().vocab_size();
  j["max_length"] = dist.space().max_length();
  nlohmann::json entries = nlohmann::json::array();
  Sentence s;
  for (std::int64_t i = 0; i < dist.space().size(); ++i) {
    if (dist.prob(i) == 0.0) continue;
    dist.space().DecodeAt(i, &s);
    entries.push_back({{"ids", s}, {"p", dist.prob(i)}});
  }
  j["entries"] = std::move(entries);
  std::ofstream os(path);
  TRF_CHECK(os.good(), "cannot open ", path, " for writing");
  os << j.dump(1) << '\n';
  TRF_CHECK(os.good(), "error writing ", path);
}

TabularDistribution ReadDistribution(const std::string& path) {
  std::ifstream is(path);
  TRF_CHECK(is.good(), "cannot open distribution file ", path);
  nlohmann::json j = nlohmann::json::parse(is);
  SentenceSpace space(j.at("vocab_size").get<int>(), j.at("max_length").get<int>());
  std::vector<double> probs(space.size(), 0.0);
  for (const auto& e : j.at("entries")) {
    Sentence s = e.at("ids").get<Sentence>();
    probs[space.IndexOf(s)] = e.at("p").get<double>();
  }
  return TabularDistribution(space, std::move(probs));
}

}  // namespace trf
