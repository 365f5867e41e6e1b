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

#include "contra/tokenizer.hpp"

#include <doctest.h>

#include "contra/error.hpp"
#include "contra/rng.hpp"
#include "contra/utf8.hpp"
#include "test_util.hpp"

using namespace contra;

TEST_SUITE_BEGIN("tokenizer");

TEST_CASE("empty input gives empty sequence") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t ").empty());
}

TEST_CASE("whitespace split with flags") {
  auto tokens = tokenize("er ruht sich aus .");
  REQUIRE(tokens.size() == 5);
  CHECK(surfaces(tokens) == std::vector<std::string>{"er", "ruht", "sich", "aus", "."});
  CHECK(tokens[0].is_sentence_initial);
  CHECK_FALSE(tokens[1].is_sentence_initial);
  CHECK_FALSE(tokens[0].is_capitalized);
  for (size_t i = 0; i < tokens.size(); ++i) {
    CHECK(tokens[i].index == static_cast<int>(i));
  }
}

TEST_CASE("capitalization flags on names") {
  auto tokens = tokenize("Senator Ensigns Büro");
  REQUIRE(tokens.size() == 3);
  for (const Token& t : tokens) CHECK(t.is_capitalized);
}

TEST_CASE("punctuation is peeled from both ends") {
  auto tokens = tokenize("«Hallo,» sagte er.");
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"«", "Hallo", ",", "»", "sagte", "er", "."});
  CHECK(tokenize("(so.)").size() == 4);
  CHECK(surfaces(tokenize("...")) == std::vector<std::string>{".", ".", "."});
}

TEST_CASE("hyphens and word-internal punctuation stay attached") {
  auto tokens = tokenize("die Comedy-Show, die");
  CHECK(surfaces(tokens) ==
        std::vector<std::string>{"die", "Comedy-Show", ",", "die"});
}

TEST_CASE("NFC composition of decomposed umlauts") {
  // "Bu" + combining diaeresis + "ro" composes to Büro
  std::string decomposed = "Bu\xCC\x88ro";
  auto tokens = tokenize(decomposed);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].surface == "Büro");
}

TEST_CASE("invalid UTF-8 throws ParseError") {
  CHECK_THROWS_AS(tokenize("\xFF\xFE kaputt"), ParseError);
}

TEST_CASE("detokenize then retokenize is the identity") {
  const char* lines[] = {
      "er ruht sich aus .",
      "« Guten Morgen » , sagte sie .",
      "die Comedy-Show , die uns Lektionen erteilt",
      "Çok güzel ağaçlar",
  };
  for (const char* line : lines) {
    auto tokens = tokenize(line);
    auto again = tokenize(detokenize(tokens));
    REQUIRE(again.size() == tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i) {
      CHECK(again[i].surface == tokens[i].surface);
      CHECK(again[i].is_capitalized == tokens[i].is_capitalized);
    }
  }
}

TEST_CASE("tokenization is deterministic across runs") {
  SiteRng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::string line;
    for (int w = 0; w < 8; ++w) {
      int len = 1 + static_cast<int>(rng.bounded(6));
      for (int c = 0; c < len; ++c) {
        line += static_cast<char>('a' + rng.bounded(26));
      }
      line += rng.bounded(4) == 0 ? "." : " ";
    }
    auto a = tokenize(line);
    auto b = tokenize(line);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].surface == b[i].surface);
  }
}

TEST_SUITE_END();
