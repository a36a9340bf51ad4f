// trf/vocab.h
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

#ifndef TRF_VOCAB_H_
#define TRF_VOCAB_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "trf/types.h"

namespace trf {

// Token <-> dense id mapping with an unknown-token entry. Read-only after
// construction; safe for concurrent readers.
class Vocabulary {
 public:
  // Keeps tokens with count >= min_count; if more than max_size survive,
  // keeps the most frequent (ties broken lexicographically). The unk token
  // is always present, occupies id 0, and counts toward max_size.
  static Vocabulary Build(const std::vector<std::vector<std::string>>& lines,
                          int min_count, int max_size,
                          const std::string& unk_token = "<unk>");

  static Vocabulary FromTokens(std::vector<std::string> tokens,
                               const std::string& unk_token);

  // One token per line, line number = id.
  static Vocabulary ReadFile(const std::string& path,
                             const std::string& unk_token = "<unk>");
  void WriteFile(const std::string& path) const;

  int size() const { return static_cast<int>(tokens_.size()); }
  TokenId unk_id() const { return unk_id_; }
  const std::string& token(TokenId id) const { return tokens_[id]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Out-of-vocabulary tokens map to unk.
  TokenId Lookup(const std::string& token) const;

  std::int64_t count(TokenId id) const { return counts_[id]; }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::int64_t> counts_;
  std::unordered_map<std::string, TokenId> index_;
  TokenId unk_id_ = 0;

  void RebuildIndex();
};

// Out-of-vocabulary tokens become unk; rejects empty sequences and
// sequences longer than max_length with a LengthError.
Sentence Encode(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                int max_length);

std::vector<std::string> Decode(const Sentence& sentence, const Vocabulary& vocab);

std::vector<std::string> SplitTokens(const std::string& line);

}  // namespace trf

#endif  // TRF_VOCAB_H_
