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

#ifndef CONTRA_EVAL_HPP_
#define CONTRA_EVAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contra/scoring.hpp"
#include "contra/testset.hpp"

namespace contra {

// One judged pair. A model succeeds when it gives the reference a strictly
// higher length-normalized score than the contrastive side; ties count as
// failures.
struct Outcome {
  std::string pair_id;
  bool success = false;
  Category category = Category::kNpAgreement;
  std::string subcategory;
  std::optional<int> distance;
  std::optional<uint64_t> frequency;
  bool sie_ambiguous = false;
};

std::vector<Outcome> judge(const std::vector<ContrastivePair>& pairs,
                           const ScoreMap& scores);

struct Tally {
  uint64_t n = 0;
  uint64_t successes = 0;

  void add(bool success) {
    ++n;
    if (success) ++successes;
  }
  bool defined() const { return n > 0; }
  double accuracy() const;  // NaN when undefined
};

struct EvalReport {
  std::string system;
  uint64_t total = 0;
  std::map<Category, Tally> by_category;
  std::map<std::string, Tally> by_subcategory;  // six negation cells
  Tally polarity_insertion;
  Tally polarity_deletion;
  Tally sie_subset;  // subject_verb pairs with ambiguous "sie" subject
};

EvalReport accuracy_table(const std::vector<Outcome>& outcomes,
                          const std::string& system);

// Distance buckets 1..15 plus a final ">=16" bucket (encoded as 16).
// Only buckets with n >= 1 are returned, in ascending order.
struct DistancePoint {
  int bucket = 0;
  double accuracy = 0;
  uint64_t n = 0;
};
int distance_bucket(int distance);
std::vector<DistancePoint> bucket_by_distance(
    const std::vector<Outcome>& outcomes);

// Power-of-two frequency bands: 0, 1, 2-3, 4-7, ...
struct FrequencyPoint {
  uint64_t lower = 0;  // inclusive band start
  std::string label;
  double accuracy = 0;
  uint64_t n = 0;
};
std::vector<FrequencyPoint> bucket_by_frequency(
    const std::vector<Outcome>& outcomes);

// Two-sided exact binomial sign test over discordant pairs.
struct SignTestResult {
  double p = 1.0;
  uint64_t discordant = 0;
  uint64_t a_only = 0;  // pairs only system A got right
  uint64_t b_only = 0;
  std::string note;
};
SignTestResult sign_test(const std::vector<Outcome>& outcomes_a,
                         const std::vector<Outcome>& outcomes_b);

// Accuracy as a percentage with one decimal, e.g. "70.0"; "-" if undefined.
std::string format_pct1(const Tally& t);

// Writes summary.md, by_category.tsv, negation.tsv and per-system
// distance/frequency plot files into report_dir.
void render_report(
    const std::vector<std::pair<std::string, std::vector<Outcome>>>& systems,
    const std::string& report_dir, const KvList& provenance);

}  // namespace contra

#endif  // CONTRA_EVAL_HPP_
