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

#include "contra/eval.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "contra/error.hpp"
#include "test_util.hpp"

using namespace contra;

namespace {

ContrastivePair polarity_pair(const std::string& id, const std::string& subcat) {
  ContrastivePair p;
  p.pair_id = id;
  p.sentence_id = id;
  p.category = Category::kPolarity;
  p.subcategory = subcat;
  p.reference = {"x", "y"};
  p.edit = {0, 1, {"z"}};
  p.contrastive = apply_edit(p.reference, p.edit);
  if (subcat.rfind("nicht", 0) != 0) p.frequency = 3;
  p.generator_rule = "test/1";
  return p;
}

ScoreMap scores_for(const std::vector<ContrastivePair>& pairs,
                    const std::vector<bool>& success) {
  ScoreMap map;
  for (size_t i = 0; i < pairs.size(); ++i) {
    ScoreRecord ref{pairs[i].pair_id, kSideReference, -1.0, 10, -0.1};
    double con_norm = success[i] ? -0.2 : -0.05;
    ScoreRecord con{pairs[i].pair_id, kSideContrastive, con_norm * 10, 10,
                    con_norm};
    map[{pairs[i].pair_id, kSideReference}] = ref;
    map[{pairs[i].pair_id, kSideContrastive}] = con;
  }
  return map;
}

Outcome outcome(const std::string& id, bool success, Category cat,
                std::optional<int> distance = {},
                std::optional<uint64_t> frequency = {},
                bool sie = false, const std::string& subcat = {}) {
  Outcome o;
  o.pair_id = id;
  o.success = success;
  o.category = cat;
  o.subcategory = subcat;
  o.distance = distance;
  o.frequency = frequency;
  o.sie_ambiguous = sie;
  return o;
}

}  // namespace

TEST_SUITE_BEGIN("eval");

TEST_CASE("judge: Table-5-style costs make the pair a failure") {
  ContrastivePair p = polarity_pair("p1", "nicht_deletion");
  ScoreMap scores;
  // costs 0.149 (reference) and 0.137 (contrastive) as normalized scores
  scores[{"p1", kSideReference}] = {"p1", kSideReference, -1.49, 10, -0.149};
  scores[{"p1", kSideContrastive}] = {"p1", kSideContrastive, -1.37, 10, -0.137};
  auto outcomes = judge({p}, scores);
  REQUIRE(outcomes.size() == 1);
  CHECK_FALSE(outcomes[0].success);
}

TEST_CASE("judge: ties are failures, strict wins succeed") {
  ContrastivePair p = polarity_pair("p1", "nicht_deletion");
  ScoreMap scores;
  scores[{"p1", kSideReference}] = {"p1", kSideReference, -1.0, 10, -0.1};
  scores[{"p1", kSideContrastive}] = {"p1", kSideContrastive, -1.0, 10, -0.1};
  CHECK_FALSE(judge({p}, scores)[0].success);

  scores[{"p1", kSideContrastive}] = {"p1", kSideContrastive, -2.0, 10, -0.2};
  CHECK(judge({p}, scores)[0].success);
}

TEST_CASE("judge: adding a constant to both sides changes nothing") {
  ContrastivePair p = polarity_pair("p1", "kein_insertion");
  for (double shift : {0.0, -0.5, -3.0}) {
    ScoreMap scores;
    scores[{"p1", kSideReference}] =
        {"p1", kSideReference, (-0.1 + shift) * 10, 10, -0.1 + shift};
    scores[{"p1", kSideContrastive}] =
        {"p1", kSideContrastive, (-0.2 + shift) * 10, 10, -0.2 + shift};
    CHECK(judge({p}, scores)[0].success);
  }
}

TEST_CASE("judge: missing scores raise an error") {
  ContrastivePair p = polarity_pair("p1", "nicht_deletion");
  ScoreMap scores;
  scores[{"p1", kSideReference}] = {"p1", kSideReference, -1.0, 10, -0.1};
  CHECK_THROWS_AS(judge({p}, scores), InvalidError);
}

TEST_CASE("accuracy table: percentages and per-subcategory tallies") {
  std::vector<Outcome> outcomes;
  outcomes.push_back(outcome("1", true, Category::kNpAgreement, 2, 5));
  outcomes.push_back(outcome("2", true, Category::kNpAgreement, 1, 5));
  outcomes.push_back(outcome("3", false, Category::kNpAgreement, 3, 5));
  EvalReport r = accuracy_table(outcomes, "sys");
  CHECK(r.total == 3);
  CHECK(r.by_category[Category::kNpAgreement].n == 3);
  CHECK(format_pct1(r.by_category[Category::kNpAgreement]) == "66.7");

  std::vector<Outcome> all_good = {outcome("1", true, Category::kPolarity, {},
                                           {}, false, "nicht_insertion")};
  EvalReport r2 = accuracy_table(all_good, "sys");
  CHECK(format_pct1(r2.polarity_insertion) == "100.0");
  CHECK(r2.by_subcategory.at("nicht_insertion").n == 1);
  CHECK(r2.polarity_deletion.n == 0);
  CHECK(format_pct1(r2.polarity_deletion) == "-");
}

TEST_CASE("accuracy table: empty stream gives zero counts, undefined marks") {
  EvalReport r = accuracy_table({}, "sys");
  CHECK(r.total == 0);
  CHECK(format_pct1(r.sie_subset) == "-");
}

TEST_CASE("accuracy table: sie subset is tallied twice") {
  std::vector<Outcome> outcomes = {
      outcome("1", true, Category::kSubjectVerb, 1, 4, true),
      outcome("2", false, Category::kSubjectVerb, 2, 4, false),
  };
  EvalReport r = accuracy_table(outcomes, "sys");
  CHECK(r.by_category[Category::kSubjectVerb].n == 2);
  CHECK(r.sie_subset.n == 1);
  CHECK(r.sie_subset.successes == 1);
}

TEST_CASE("distance buckets: 1..15 individually, >=16 pooled") {
  CHECK(distance_bucket(1) == 1);
  CHECK(distance_bucket(4) == 4);
  CHECK(distance_bucket(15) == 15);
  CHECK(distance_bucket(16) == 16);
  CHECK(distance_bucket(25) == 16);

  std::vector<Outcome> outcomes;
  for (int d : {1, 4, 16, 25}) {
    outcomes.push_back(outcome("d" + std::to_string(d), true,
                               Category::kSubjectVerb, d, 1));
  }
  auto series = bucket_by_distance(outcomes);
  REQUIRE(series.size() == 3);
  CHECK(series[0].bucket == 1);
  CHECK(series[1].bucket == 4);
  CHECK(series[2].bucket == 16);
  CHECK(series[2].n == 2);

  CHECK(bucket_by_distance({}).empty());
}

TEST_CASE("frequency bands are powers of two") {
  std::vector<Outcome> outcomes = {
      outcome("a", true, Category::kTransliteration, {}, 0),
      outcome("b", true, Category::kSubjectVerb, 1, 1),
      outcome("c", false, Category::kSubjectVerb, 1, 1),
      outcome("d", true, Category::kSubjectVerb, 1, 2),
      outcome("e", true, Category::kSubjectVerb, 1, 5),
      outcome("f", true, Category::kSubjectVerb, 1, 1023),
  };
  auto bands = bucket_by_frequency(outcomes);
  REQUIRE(bands.size() == 5);
  CHECK(bands[0].label == "0");
  CHECK(bands[0].n == 1);
  CHECK(bands[1].label == "1");
  CHECK(bands[1].n == 2);
  CHECK(bands[1].accuracy == doctest::Approx(0.5));
  CHECK(bands[2].label == "2-3");
  CHECK(bands[3].label == "4-7");
  CHECK(bands[3].lower == 4);
  CHECK(bands[4].label == "512-1023");
}

TEST_CASE("sign test: exact binomial two-sided") {
  auto make = [](const std::vector<int>& wins) {
    std::vector<Outcome> v;
    for (size_t i = 0; i < wins.size(); ++i) {
      v.push_back(outcome("p" + std::to_string(i), wins[i] != 0,
                          Category::kSubjectVerb, 1, 1));
    }
    return v;
  };

  SUBCASE("8 vs 2 discordant") {
    // A wins pairs 0..7, B wins pairs 8..9; no ties
    std::vector<int> a(10, 0), b(10, 0);
    for (int i = 0; i < 8; ++i) a[i] = 1;
    for (int i = 8; i < 10; ++i) b[i] = 1;
    SignTestResult r = sign_test(make(a), make(b));
    CHECK(r.discordant == 10);
    CHECK(r.p == doctest::Approx(0.109375).epsilon(1e-4));
    SignTestResult rev = sign_test(make(b), make(a));
    CHECK(rev.p == doctest::Approx(r.p).epsilon(1e-12));
  }

  SUBCASE("10 vs 0 discordant") {
    std::vector<int> a(10, 1), b(10, 0);
    SignTestResult r = sign_test(make(a), make(b));
    CHECK(r.p == doctest::Approx(0.001953125).epsilon(1e-5));
  }

  SUBCASE("no discordant pairs") {
    std::vector<int> same = {1, 0, 1, 1, 0};
    SignTestResult r = sign_test(make(same), make(same));
    CHECK(r.discordant == 0);
    CHECK(r.p == 1.0);
    CHECK(r.note == "no discordant pairs");
  }

  SUBCASE("even split caps at 1") {
    std::vector<int> a(10, 0), b(10, 0);
    for (int i = 0; i < 5; ++i) a[i] = 1;
    for (int i = 5; i < 10; ++i) b[i] = 1;
    SignTestResult r = sign_test(make(a), make(b));
    CHECK(r.p == 1.0);
  }

  SUBCASE("ties are excluded from the discordant count") {
    std::vector<int> a = {1, 1, 1, 0, 0};
    std::vector<int> b = {1, 1, 0, 0, 0};
    SignTestResult r = sign_test(make(a), make(b));
    CHECK(r.discordant == 1);
    CHECK(r.a_only == 1);
    CHECK(r.b_only == 0);
  }

  SUBCASE("different pair sets are an error") {
    CHECK_THROWS_AS(sign_test(make({1, 0}), make({1, 0, 1})), InvalidError);
  }
}

TEST_CASE("render_report writes the full report directory") {
  testutil::TempDir tmp;
  std::vector<Outcome> sys_a = {
      outcome("1", true, Category::kSubjectVerb, 1, 4, true),
      outcome("2", false, Category::kSubjectVerb, 17, 4),
      outcome("3", true, Category::kPolarity, {}, {}, false, "nicht_insertion"),
      outcome("4", false, Category::kPolarity, {}, 2, false, "kein_deletion"),
      outcome("5", true, Category::kNpAgreement, 2, 9),
  };
  std::vector<Outcome> sys_b = sys_a;
  sys_b[1].success = true;

  render_report({{"base", sys_a}, {"other", sys_b}}, tmp.file("report"),
                {{"config", "f00"}});

  for (const char* name :
       {"summary.md", "by_category.tsv", "negation.tsv", "distance_base.plot",
        "distance_other.plot", "frequency_base.plot", "frequency_other.plot"}) {
    CHECK(std::filesystem::exists(tmp.file("report/" + std::string(name))));
  }

  std::string category_tsv = testutil::read_file(tmp.file("report/by_category.tsv"));
  CHECK(category_tsv.find("np_agreement") != std::string::npos);
  CHECK(category_tsv.find("\nbase\t") != std::string::npos);

  std::string plot = testutil::read_file(tmp.file("report/distance_base.plot"));
  // two-column text: bucket and accuracy
  CHECK(plot.find("1 1") != std::string::npos);
  CHECK(plot.find("16 0") != std::string::npos);

  std::string summary = testutil::read_file(tmp.file("report/summary.md"));
  CHECK(summary.find("sign test") != std::string::npos);
}

TEST_CASE("render_report: single system has no significance marking") {
  testutil::TempDir tmp;
  std::vector<Outcome> sys = {
      outcome("1", true, Category::kSubjectVerb, 1, 4),
  };
  render_report({{"solo", sys}}, tmp.file("report"), {});
  std::string summary = testutil::read_file(tmp.file("report/summary.md"));
  CHECK(summary.find("Pairwise sign tests") == std::string::npos);
}

TEST_CASE("render_report: identical systems tie with p = 1") {
  testutil::TempDir tmp;
  std::vector<Outcome> sys = {
      outcome("1", true, Category::kSubjectVerb, 1, 4),
      outcome("2", false, Category::kSubjectVerb, 2, 4),
  };
  render_report({{"a", sys}, {"b", sys}}, tmp.file("report"), {});
  std::string summary = testutil::read_file(tmp.file("report/summary.md"));
  CHECK(summary.find("| a | b | 0 | 0 | 0 | 1 |") != std::string::npos);
}

TEST_CASE("judge integrates with score maps from scoring") {
  std::vector<ContrastivePair> pairs = {polarity_pair("p1", "un_deletion"),
                                        polarity_pair("p2", "un_insertion")};
  ScoreMap scores = scores_for(pairs, {true, false});
  auto outcomes = judge(pairs, scores);
  EvalReport r = accuracy_table(outcomes, "sys");
  CHECK(r.by_subcategory.at("un_deletion").successes == 1);
  CHECK(r.by_subcategory.at("un_insertion").successes == 0);
}

TEST_SUITE_END();
