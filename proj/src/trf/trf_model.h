// trf/trf_model.h
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

#ifndef TRF_TRF_MODEL_H_
#define TRF_TRF_MODEL_H_

#include <memory>

#include "trf/potential.h"
#include "trf/rng.h"

namespace trf {

// log Z_l starting point. The analytically natural value for a zero
// potential is l*log|V|; the literal paper value l*|V| is kept behind a
// switch for comparison runs.
enum class LogZInit { kLogVocab, kPaperLiteral };

// The whole-sentence model p(l, x^l) = pi_l * exp(phi(x^l) - log Z_l) with
// the per-length log-normalizers treated as trainable parameters. All of
// theta-hat (potential blocks plus the "log_z" block) lives in one store.
class TrfModel {
 public:
  static std::unique_ptr<TrfModel> BiRecurrent(int vocab_size, int embed_dim,
                                               int max_length, LengthPrior prior,
                                               LogZInit init, Rng& rng);
  static std::unique_ptr<TrfModel> Tabular(int vocab_size, int max_length,
                                           LengthPrior prior,
                                           LogZInit init = LogZInit::kLogVocab);
  // Rebuilds a model around an existing store (checkpoint restore). The
  // store must already contain the potential blocks and "log_z".
  static std::unique_ptr<TrfModel> FromStore(ParamStore store,
                                             const std::string& potential_kind,
                                             int vocab_size, int embed_dim,
                                             int max_length, LengthPrior prior);

  TrfModel(const TrfModel&) = delete;
  TrfModel& operator=(const TrfModel&) = delete;

  // phi(x^l) - log Z_l.
  double LogPhiHat(const Sentence& s, PhiScratch& scratch) const;

  // log pi_l + phi - log Z_l with the current learned log_z; minus infinity
  // for lengths outside the prior's support.
  double LogProb(const Sentence& s, PhiScratch& scratch) const;

  // Rescoring entry point: identical value to LogProb, and its cost never
  // grows with the vocabulary beyond embedding lookups.
  double SentenceScore(const Sentence& s, PhiScratch& scratch) const {
    return LogProb(s, scratch);
  }

  double LogProb(const Sentence& s) const {
    PhiScratch scratch;
    return LogProb(s, scratch);
  }

  // Accumulates weight * d(phi - log Z_l)/d(theta-hat) into the sink and
  // returns phi-hat.
  double PhiHatWithGrad(const Sentence& s, double weight, GradSink& sink,
                        PhiScratch& scratch) const;

  const Potential& potential() const { return *potential_; }
  Potential& potential() { return *potential_; }
  ParamStore& params() { return store_; }
  const ParamStore& params() const { return store_; }
  const LengthPrior& prior() const { return prior_; }
  int max_length() const { return potential_->max_length(); }
  int vocab_size() const { return potential_->vocab_size(); }
  int logz_block() const { return logz_block_; }

  std::span<double> log_z() { return store_.block(logz_block_).value.Flat(); }
  std::span<const double> log_z() const {
    return store_.block(logz_block_).value.Flat();
  }

 private:
  TrfModel() = default;

  void InitLogZ(LogZInit init);

  ParamStore store_;
  std::unique_ptr<Potential> potential_;
  LengthPrior prior_;
  int logz_block_ = -1;
};

}  // namespace trf

#endif  // TRF_TRF_MODEL_H_
