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

#include "contra/stats.hpp"

#include <doctest.h>

#include <sstream>

#include "contra/error.hpp"
#include "contra/rng.hpp"
#include "test_util.hpp"

using namespace contra;
using testutil::lexicons;

TEST_SUITE_BEGIN("stats");

TEST_CASE("counts words and verb-particle pairs") {
  CorpusStats stats = testutil::stats_from_lines(
      {"er ruht sich aus .", "er ruht sich aus ."});
  CHECK(stats.frequency("ruht") == 2);
  CHECK(stats.frequency("er") == 2);
  CHECK(stats.frequency(".") == 2);
  CHECK(stats.particle_count("ruht", "aus") == 2);
  CHECK(stats.particle_count("ruht", "an") == 0);
  CHECK(stats.token_count == 10);
}

TEST_CASE("empty corpus gives empty stats") {
  CorpusStats stats = testutil::stats_from_lines({});
  CHECK(stats.word_freq.empty());
  CHECK(stats.verb_particle.empty());
  CHECK(stats.token_count == 0);
}

TEST_CASE("frequency of unseen forms is zero") {
  CorpusStats stats = testutil::stats_from_lines({"Senator Büro ."});
  CHECK(stats.frequency("Ensigns") == 0);
  CHECK(stats.frequency("") == 0);
}

TEST_CASE("undecodable lines are rejected, processing continues") {
  CorpusStats stats = build_stats(
      {"er ruht sich aus .", "\xFF\xFF", "er kommt ."}, lexicons());
  CHECK(stats.rejected_lines == 1);
  CHECK(stats.frequency("kommt") == 1);
}

TEST_CASE("token count equals the frequency sum") {
  CorpusStats stats = testutil::stats_from_lines(
      {"der Zug fährt um zehn Uhr ab .", "sie macht die Tür auf ."});
  uint64_t sum = 0;
  for (const auto& [form, n] : stats.word_freq) sum += n;
  CHECK(sum == stats.token_count);
}

TEST_CASE("merge matches a single-pass build for any split") {
  std::vector<std::string> lines = {
      "er ruht sich aus .",      "sie macht die Tür auf .",
      "der Zug fährt ab .",      "das Timing ist unsicher .",
      "er kommt nicht .",        "die Pläne sind gut .",
      "er hört heute zu .",      "das Konzert fängt gleich an .",
  };
  CorpusStats whole = build_stats(lines, lexicons());

  SiteRng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    size_t cut = rng.bounded(lines.size() + 1);
    CorpusStats a = build_stats(
        std::vector<std::string>(lines.begin(), lines.begin() + cut), lexicons());
    CorpusStats b = build_stats(
        std::vector<std::string>(lines.begin() + cut, lines.end()), lexicons());
    a.merge(b);
    CHECK(a.word_freq == whole.word_freq);
    CHECK(a.verb_particle == whole.verb_particle);
    CHECK(a.token_count == whole.token_count);

    // merge is commutative as well
    CorpusStats c = build_stats(
        std::vector<std::string>(lines.begin() + cut, lines.end()), lexicons());
    c.merge(build_stats(
        std::vector<std::string>(lines.begin(), lines.begin() + cut), lexicons()));
    CHECK(c.word_freq == whole.word_freq);
  }
}

TEST_CASE("parallel build equals sequential build") {
  std::vector<std::string> lines;
  for (int i = 0; i < 200; ++i) {
    lines.push_back(i % 3 ? "er ruht sich aus ." : "sie macht die Tür auf .");
  }
  CorpusStats seq = build_stats(lines, lexicons(), 1);
  CorpusStats par = build_stats(lines, lexicons(), 8);
  CHECK(seq.word_freq == par.word_freq);
  CHECK(seq.verb_particle == par.verb_particle);
  CHECK(seq.token_count == par.token_count);
}

TEST_CASE("stats file round-trips") {
  CorpusStats stats = testutil::stats_from_lines(
      {"er ruht sich aus .", "das Timing ist unsicher ."});
  std::ostringstream out;
  write_stats(stats, out, {{"config", "deadbeef"}, {"seed", "1"}});

  std::istringstream in(out.str());
  CorpusStats back = read_stats(in);
  CHECK(back.word_freq == stats.word_freq);
  CHECK(back.verb_particle == stats.verb_particle);
  CHECK(back.token_count == stats.token_count);
  CHECK(back.normalization_tag == stats.normalization_tag);

  // writing the reloaded stats reproduces the file byte for byte
  std::ostringstream again;
  write_stats(back, again, {{"config", "deadbeef"}, {"seed", "1"}});
  CHECK(again.str() == out.str());
}

TEST_CASE("merging stats with different normalization tags fails") {
  CorpusStats a = testutil::stats_from_lines({"er kommt ."});
  CorpusStats b = testutil::stats_from_lines({"sie geht ."});
  b.normalization_tag = "other/1";
  CHECK_THROWS_AS(a.merge(b), InvalidError);
}

TEST_CASE("malformed stats files are rejected with a line number") {
  std::istringstream in(
      "#contra/1.0.0 format=stats/1 normalization=ws-punct-nfclatin/1\n"
      "WORD\tfoo\t0\n");
  CHECK_THROWS_WITH_AS(read_stats(in),
                       doctest::Contains("line 2"), InvalidError);

  std::istringstream bad_header("#something else\n");
  CHECK_THROWS_AS(read_stats(bad_header), ParseError);
}

TEST_SUITE_END();
