// trf/nbest.cc
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

#include "trf/nbest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace trf {

int NBestList::FindUtt(const std::string& utt) const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].utt == utt) return static_cast<int>(i);
  }
  return -1;
}

NBestList ReadNBest(const std::string& path) {
  std::ifstream is(path);
  TRF_CHECK(is.good(), "cannot open n-best file ", path);
  NBestList list;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto tokens = SplitTokens(line);
    if (tokens.empty()) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Fail("malformed n-best line ", line_no, " in ", path);
    }
    std::string utt = tokens.front();
    std::vector<std::string> hyp(tokens.begin() + 1, tokens.end());
    if (!list.entries.empty() && list.entries.back().utt == utt) {
      list.entries.back().hyps.push_back(std::move(hyp));
    } else {
      if (!seen.insert(utt).second) {
        Fail("utterance ", utt, " reappears at non-contiguous line ", line_no,
             " in ", path);
      }
      list.entries.push_back(NBestEntry{std::move(utt), {std::move(hyp)}});
    }
  }
  return list;
}

void WriteNBest(const NBestList& list, const std::string& path) {
  std::ofstream os(path);
  TRF_CHECK(os.good(), "cannot open ", path, " for writing");
  for (const auto& e : list.entries) {
    TRF_CHECK(!e.hyps.empty(), "utterance ", e.utt, " has no hypotheses");
    for (const auto& hyp : e.hyps) {
      os << e.utt;
      for (const auto& tok : hyp) os << ' ' << tok;
      os << '\n';
    }
  }
  TRF_CHECK(os.good(), "error writing ", path);
}

ScoreTable ReadScoreFile(const std::string& path) {
  std::ifstream is(path);
  TRF_CHECK(is.good(), "cannot open score file ", path);
  ScoreTable scores;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string utt;
    int hyp_index;
    double score;
    if (!(ls >> utt >> hyp_index >> score)) {
      Fail("malformed score line ", line_no, " in ", path);
    }
    scores[{utt, hyp_index}] = score;
  }
  return scores;
}

void WriteScoreFile(const ScoreTable& scores, const std::string& path) {
  std::ofstream os(path);
  TRF_CHECK(os.good(), "cannot open ", path, " for writing");
  char buf[64];
  for (const auto& [key, score] : scores) {
    std::snprintf(buf, sizeof(buf), "%.17g", score);
    os << key.first << ' ' << key.second << ' ' << buf << '\n';
  }
  TRF_CHECK(os.good(), "error writing ", path);
}

namespace {

// One random substitution/insertion/deletion. Deletion is skipped at length
// 1 and insertion at max_length so the hypothesis stays scorable.
void ApplyRandomEdit(Sentence& s, int vocab_size, int max_length, Rng& rng) {
  for (;;) {
    int kind = rng.NextIndex(3);
    int len = static_cast<int>(s.size());
    if (kind == 0) {  // substitution
      int pos = rng.NextIndex(len);
      s[pos] = static_cast<TokenId>(rng.NextIndex(vocab_size));
      return;
    }
    if (kind == 1 && len < max_length) {  // insertion
      int pos = rng.NextIndex(len + 1);
      s.insert(s.begin() + pos, static_cast<TokenId>(rng.NextIndex(vocab_size)));
      return;
    }
    if (kind == 2 && len > 1) {  // deletion
      int pos = rng.NextIndex(len);
      s.erase(s.begin() + pos);
      return;
    }
  }
}

}  // namespace

FakeNBest MakeFakeNBest(const std::vector<Sentence>& corpus, const Vocabulary& vocab,
                        int n_sentences, int min_errors, int max_errors,
                        int n_alternatives, int max_length, Rng& rng) {
  TRF_CHECK(!corpus.empty(), "cannot build a fake n-best list from an empty corpus");
  TRF_CHECK(min_errors >= 0 && max_errors >= min_errors, "bad error range");
  TRF_CHECK(n_alternatives >= 0, "bad alternative count");

  // Partial Fisher-Yates draw of n distinct reference indices.
  int n = std::min<int>(n_sentences, static_cast<int>(corpus.size()));
  std::vector<int> order(corpus.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (int i = 0; i < n; ++i) {
    int j = i + rng.NextIndex(static_cast<int>(order.size()) - i);
    std::swap(order[i], order[j]);
  }

  FakeNBest out;
  for (int i = 0; i < n; ++i) {
    const Sentence& ref = corpus[order[i]];
    NBestEntry entry;
    entry.utt = StrCat("fake", i);
    entry.hyps.push_back(Decode(ref, vocab));
    for (int a = 0; a < n_alternatives; ++a) {
      Sentence hyp = ref;
      int n_errors = min_errors + rng.NextIndex(max_errors - min_errors + 1);
      for (int e = 0; e < n_errors; ++e) {
        ApplyRandomEdit(hyp, vocab.size(), max_length, rng);
      }
      entry.hyps.push_back(Decode(hyp, vocab));
    }
    out.references.push_back(NBestEntry{entry.utt, {entry.hyps.front()}});
    out.nbest.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace trf
