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

#ifndef CONTRA_TOKENIZER_HPP_
#define CONTRA_TOKENIZER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace contra {

// Identifier of the tokenization/normalization scheme implemented here.
// Stored in stats files and checked at generation time so that corpus
// statistics and test data are guaranteed to have been built identically.
inline constexpr const char* kNormalizationTag = "ws-punct-nfclatin/1";

struct Token {
  std::string surface;             // non-empty, no whitespace
  int index = 0;                   // 0-based position in the sentence
  bool is_sentence_initial = false;
  bool is_capitalized = false;     // first scalar is an uppercase letter
};

struct Sentence {
  std::string id;
  std::string source_text;         // may be empty
  std::vector<Token> tokens;
};

// Splits one line of target-language text into tokens: whitespace split,
// then leading/trailing punctuation (. , ! ? ; : " « » ( )) peeled into
// separate tokens. Input is NFC-composed (Latin subset) and stripped of
// control characters first. Throws ParseError on invalid UTF-8.
std::vector<Token> tokenize(std::string_view line);

// Joins surfaces with single spaces. tokenize(detokenize(t)) == t for any
// token sequence produced by tokenize.
std::string detokenize(const std::vector<Token>& tokens);

std::vector<Token> to_tokens(const std::vector<std::string>& surfaces);
std::vector<std::string> surfaces(const std::vector<Token>& tokens);

bool is_punctuation_token(const std::string& surface);

Sentence make_sentence(std::string id, std::string_view target_line,
                       std::string source_text = {});

}  // namespace contra

#endif  // CONTRA_TOKENIZER_HPP_
