// Copyright 2026 The contra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTRA_SCORING_HPP_
#define CONTRA_SCORING_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contra/segmentation.hpp"
#include "contra/testset.hpp"
#include "contra/tokenizer.hpp"

namespace contra {

inline constexpr const char* kSideReference = "reference";
inline constexpr const char* kSideContrastive = "contrastive";

struct ScoreRecord {
  std::string pair_id;
  std::string side;         // reference | contrastive
  double total_logprob = 0; // natural log, <= 0
  uint64_t symbol_count = 1; // target symbols incl. the end symbol
  double normalized = 0;    // total_logprob / symbol_count
};

// Target-side n-gram language model with interpolated absolute discounting.
// It stands in for sequence scorers that are not available locally; real
// systems plug in through the external score file protocol instead.
class NgramModel {
 public:
  static constexpr double kDiscount = 0.75;

  NgramModel() = default;
  NgramModel(int order, Scheme scheme, std::optional<BpeModel> bpe = {});

  int order() const { return order_; }
  Scheme scheme() const { return scheme_; }

  void train_line(const std::string& line);
  void train(const std::vector<std::string>& lines);
  uint64_t rejected_lines() const { return rejected_; }

  // Rendered target symbols for a token sequence (no sentence markers).
  std::vector<std::string> segment(const std::vector<Token>& tokens) const;

  // P(symbol | context); context is a rendered-symbol sequence, longest
  // suffix up to order-1 is used. Unseen symbols share one reserved
  // unknown slot, so every probability is finite and the conditional
  // distribution over inventory+unknown sums to one.
  double prob(const std::vector<std::string>& context,
              const std::string& symbol) const;

  // total = sum of log P over symbols + end marker; count includes the end
  // marker; normalized = total / count.
  ScoreRecord score_tokens(const std::vector<Token>& tokens) const;

  std::vector<std::string> inventory() const;  // predictable symbols

  void save(std::ostream& out, const KvList& provenance) const;
  void save_file(const std::string& path, const KvList& provenance) const;
  static NgramModel load(std::istream& in);
  static NgramModel load_file(const std::string& path);

  static constexpr const char* kBos = "<s>";
  static constexpr const char* kEos = "</s>";

 private:
  struct Context {
    uint64_t total = 0;
    std::map<std::string, uint64_t> next;
  };

  void count_sentence(const std::vector<std::string>& symbols);

  int order_ = 1;
  Scheme scheme_ = Scheme::kWord;
  std::optional<BpeModel> bpe_;
  uint64_t rejected_ = 0;
  // levels_[k]: contexts of length k (levels_[0] holds the unigram counts).
  std::vector<std::map<std::vector<std::string>, Context>> levels_;
};

NgramModel lm_train_file(const std::string& corpus_path, int order,
                         Scheme scheme, std::optional<BpeModel> bpe = {});

// Scores both sides of every pair, in pair order (reference first).
std::vector<ScoreRecord> score_pairs(const NgramModel& model,
                                     const std::vector<ContrastivePair>& pairs,
                                     int jobs = 1);

using ScoreKey = std::pair<std::string, std::string>;  // (pair_id, side)
using ScoreMap = std::map<ScoreKey, ScoreRecord>;

// scores.tsv: pair_id, side, total_logprob, symbol_count, normalized.
void write_scores(const std::vector<ScoreRecord>& records, std::ostream& out,
                  const KvList& provenance);
void write_scores_file(const std::vector<ScoreRecord>& records,
                       const std::string& path, const KvList& provenance);
std::vector<ScoreRecord> read_score_records(std::istream& in);
std::vector<ScoreRecord> read_score_records_file(const std::string& path);

// Validates an externally produced score file against a pair set: every
// (pair_id, side) covered exactly once, normalized consistent with
// total/count within 1e-6, scores non-positive.
ScoreMap read_external_scores(const std::vector<ContrastivePair>& pairs,
                              const std::string& score_path);
ScoreMap index_scores(const std::vector<ContrastivePair>& pairs,
                      const std::vector<ScoreRecord>& records);

// The input handed to an external scorer:
// pair_id <TAB> side <TAB> source_text <TAB> target_text.
void export_scoring_input(const std::vector<ContrastivePair>& pairs,
                          std::ostream& out, const KvList& provenance);
void export_scoring_input_file(const std::vector<ContrastivePair>& pairs,
                               const std::string& path,
                               const KvList& provenance);

}  // namespace contra

#endif  // CONTRA_SCORING_HPP_
