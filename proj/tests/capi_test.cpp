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

// Exercises the shared-library surface end to end, the same way the CLI
// does: only contra.h, no internal headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "contra.h"

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("contra_capi_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string s((std::istreambuf_iterator<char>(in)),
                std::istreambuf_iterator<char>());
  return s;
}

}  // namespace

TEST_CASE("version and error strings are always valid") {
  CHECK(contra_version() != nullptr);
  CHECK(contra_last_error() != nullptr);
}

TEST_CASE("error paths set status and message") {
  contra_lexicons* lex = nullptr;
  contra_status rc = contra_lexicons_load("/no/such/directory", &lex);
  CHECK(rc == CONTRA_ERR_IO);
  CHECK(std::strlen(contra_last_error()) > 0);
  CHECK(lex == nullptr);

  contra_stats* stats = nullptr;
  CHECK(contra_stats_open("/no/such/stats.tsv", &stats) == CONTRA_ERR_IO);

  CHECK(contra_lexicons_load(nullptr, &lex) == CONTRA_ERR_USAGE);
}

TEST_CASE("full pipeline through the C API") {
  TempDir tmp;

  write_file(tmp.file("train.txt"),
             "das Timing ist sicher .\n"
             "das Timing ist unsicher .\n"
             "er ruht sich aus .\n"
             "der Senator sieht das Büro .\n");
  write_file(tmp.file("refs.txt"),
             "das Timing ist unsicher .\n"
             "er ruht sich aus .\n"
             "Senator Ensigns Büro ist offen .\n");
  write_file(tmp.file("src.txt"),
             "the timing is uncertain .\n"
             "he is resting .\n"
             "Mr. Ensign's office is open .\n");

  contra_lexicons* lex = nullptr;
  REQUIRE(contra_lexicons_load(CONTRA_LEXICON_DIR, &lex) == CONTRA_OK);

  REQUIRE(contra_stats_build(tmp.file("train.txt").c_str(), lex, 2,
                             tmp.file("stats.tsv").c_str()) == CONTRA_OK);

  contra_stats* stats = nullptr;
  REQUIRE(contra_stats_open(tmp.file("stats.tsv").c_str(), &stats) == CONTRA_OK);
  CHECK(contra_stats_frequency(stats, "Timing") == 2);
  CHECK(contra_stats_frequency(stats, "Ensigns") == 0);
  CHECK(contra_stats_frequency(stats, nullptr) == 0);
  CHECK(contra_stats_particle_count(stats, "ruht", "aus") == 1);
  CHECK(contra_stats_particle_count(stats, "ruht", "an") == 0);

  uint64_t n_pairs = 0;
  REQUIRE(contra_generate(tmp.file("refs.txt").c_str(),
                          tmp.file("src.txt").c_str(), stats, lex, nullptr, 42,
                          0, 2, tmp.file("pairs.jsonl").c_str(),
                          &n_pairs) == CONTRA_OK);
  CHECK(n_pairs > 0);

  // category filter with an unknown name is a usage error
  CHECK(contra_generate(tmp.file("refs.txt").c_str(), nullptr, stats, lex,
                        "bogus_category", 42, 0, 1,
                        tmp.file("bad.jsonl").c_str(), nullptr) ==
        CONTRA_ERR_USAGE);

  std::string train_path = tmp.file("train.txt");
  const char* corpora[] = {train_path.c_str()};
  REQUIRE(contra_bpe_learn(corpora, 1, 20, tmp.file("bpe.model").c_str()) ==
          CONTRA_OK);

  REQUIRE(contra_lm_train(train_path.c_str(), 2, "word", nullptr,
                          tmp.file("lm.model").c_str()) == CONTRA_OK);
  REQUIRE(contra_lm_train(train_path.c_str(), 2, "bpe",
                          tmp.file("bpe.model").c_str(),
                          tmp.file("lm_bpe.model").c_str()) == CONTRA_OK);

  contra_lm* lm = nullptr;
  REQUIRE(contra_lm_open(tmp.file("lm.model").c_str(), &lm) == CONTRA_OK);
  REQUIRE(contra_score_pairs(tmp.file("pairs.jsonl").c_str(), lm, 2,
                             tmp.file("scores.tsv").c_str()) == CONTRA_OK);

  REQUIRE(contra_export_scoring_input(tmp.file("pairs.jsonl").c_str(),
                                      tmp.file("input.tsv").c_str()) ==
          CONTRA_OK);
  std::string input = slurp(tmp.file("input.tsv"));
  CHECK(input.find("\treference\t") != std::string::npos);
  CHECK(input.find("the timing is uncertain .") != std::string::npos);

  // our own score files satisfy the external protocol
  REQUIRE(contra_score_external(tmp.file("pairs.jsonl").c_str(),
                                tmp.file("scores.tsv").c_str(),
                                tmp.file("scores2.tsv").c_str()) == CONTRA_OK);

  std::string scores_path = tmp.file("scores.tsv");
  const char* files[] = {scores_path.c_str()};
  const char* labels[] = {"baseline"};
  REQUIRE(contra_evaluate(tmp.file("pairs.jsonl").c_str(), files, labels, 1,
                          tmp.file("report").c_str()) == CONTRA_OK);
  CHECK(std::filesystem::exists(tmp.file("report/summary.md")));
  CHECK(std::filesystem::exists(tmp.file("report/by_category.tsv")));

  contra_lm_free(lm);
  contra_stats_free(stats);
  contra_lexicons_free(lex);
}

TEST_CASE("determinism through the C API") {
  TempDir tmp;
  write_file(tmp.file("train.txt"), "er ruht sich aus .\n");
  write_file(tmp.file("refs.txt"), "er ruht sich aus .\n");

  contra_lexicons* lex = nullptr;
  REQUIRE(contra_lexicons_load(CONTRA_LEXICON_DIR, &lex) == CONTRA_OK);
  REQUIRE(contra_stats_build(tmp.file("train.txt").c_str(), lex, 1,
                             tmp.file("stats.tsv").c_str()) == CONTRA_OK);
  contra_stats* stats = nullptr;
  REQUIRE(contra_stats_open(tmp.file("stats.tsv").c_str(), &stats) == CONTRA_OK);

  for (int jobs : {1, 4}) {
    REQUIRE(contra_generate(tmp.file("refs.txt").c_str(), nullptr, stats, lex,
                            nullptr, 7, 0, jobs,
                            tmp.file("pairs" + std::to_string(jobs) + ".jsonl")
                                .c_str(),
                            nullptr) == CONTRA_OK);
  }
  CHECK(slurp(tmp.file("pairs1.jsonl")) == slurp(tmp.file("pairs4.jsonl")));

  contra_stats_free(stats);
  contra_lexicons_free(lex);
}
