// trf/vocab.cc
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

#include "trf/vocab.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace trf {

Vocabulary Vocabulary::Build(const std::vector<std::vector<std::string>>& lines,
                             int min_count, int max_size,
                             const std::string& unk_token) {
  TRF_CHECK(min_count >= 1, "min_count must be >= 1");
  TRF_CHECK(max_size >= 1, "max_size must be >= 1");

  // std::map keeps candidate enumeration deterministic.
  std::map<std::string, std::int64_t> counts;
  for (const auto& line : lines) {
    for (const auto& tok : line) ++counts[tok];
  }
  std::int64_t unk_corpus_count = 0;
  if (auto it = counts.find(unk_token); it != counts.end()) {
    unk_corpus_count = it->second;
    counts.erase(it);
  }

  std::vector<std::pair<std::string, std::int64_t>> kept;
  for (const auto& [tok, c] : counts) {
    if (c >= min_count) kept.emplace_back(tok, c);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  // unk occupies one slot of max_size.
  if (static_cast<int>(kept.size()) > max_size - 1) {
    kept.resize(max_size - 1);
  }

  Vocabulary v;
  v.tokens_.push_back(unk_token);
  v.counts_.push_back(unk_corpus_count);
  v.unk_id_ = 0;
  for (auto& [tok, c] : kept) {
    v.tokens_.push_back(std::move(tok));
    v.counts_.push_back(c);
  }
  v.RebuildIndex();
  return v;
}

Vocabulary Vocabulary::FromTokens(std::vector<std::string> tokens,
                                  const std::string& unk_token) {
  Vocabulary v;
  v.tokens_ = std::move(tokens);
  auto it = std::find(v.tokens_.begin(), v.tokens_.end(), unk_token);
  if (it == v.tokens_.end()) {
    v.tokens_.insert(v.tokens_.begin(), unk_token);
    it = v.tokens_.begin();
  }
  v.unk_id_ = static_cast<TokenId>(it - v.tokens_.begin());
  v.counts_.assign(v.tokens_.size(), 0);
  v.RebuildIndex();
  return v;
}

Vocabulary Vocabulary::ReadFile(const std::string& path,
                                const std::string& unk_token) {
  std::ifstream is(path);
  TRF_CHECK(is.good(), "cannot open vocabulary file ", path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    TRF_CHECK(!line.empty(), "empty line ", tokens.size() + 1, " in ", path);
    tokens.push_back(line);
  }
  return FromTokens(std::move(tokens), unk_token);
}

void Vocabulary::WriteFile(const std::string& path) const {
  std::ofstream os(path);
  TRF_CHECK(os.good(), "cannot open ", path, " for writing");
  for (const auto& tok : tokens_) os << tok << '\n';
  TRF_CHECK(os.good(), "error writing ", path);
}

TokenId Vocabulary::Lookup(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? unk_id_ : it->second;
}

void Vocabulary::RebuildIndex() {
  index_.clear();
  for (size_t i = 0; i < tokens_.size(); ++i) {
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<TokenId>(i));
    TRF_CHECK(inserted, "duplicate token ", tokens_[i]);
  }
}

Sentence Encode(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                int max_length) {
  if (tokens.empty()) throw LengthError("cannot encode an empty sentence");
  if (static_cast<int>(tokens.size()) > max_length) {
    throw LengthError(StrCat("sentence length ", tokens.size(),
                             " exceeds maximum ", max_length));
  }
  Sentence s;
  s.reserve(tokens.size());
  for (const auto& tok : tokens) s.push_back(vocab.Lookup(tok));
  return s;
}

std::vector<std::string> Decode(const Sentence& sentence, const Vocabulary& vocab) {
  std::vector<std::string> out;
  out.reserve(sentence.size());
  for (TokenId id : sentence) {
    TRF_CHECK(id >= 0 && id < vocab.size(), "token id ", id, " out of range");
    out.push_back(vocab.token(id));
  }
  return out;
}

std::vector<std::string> SplitTokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(std::move(tok));
  return out;
}

}  // namespace trf
