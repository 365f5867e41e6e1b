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

#include "contra/error.hpp"
#include "contra/utf8.hpp"

namespace contra {

namespace {

bool is_split_punct(char32_t c) {
  switch (c) {
    case U'.': case U',': case U'!': case U'?': case U';': case U':':
    case U'"': case U'«': case U'»': case U'(': case U')':
      return true;
    default:
      return false;
  }
}

bool is_control(char32_t c) {
  return (c < 0x20) || c == 0x7F || (c >= 0x80 && c <= 0x9F) || c == 0xFEFF;
}

// Splits one whitespace-delimited chunk into punctuation prefix, core and
// punctuation suffix, emitting each punctuation scalar as its own token.
void emit_chunk(const std::vector<char32_t>& chunk,
                std::vector<std::string>* out) {
  size_t lo = 0;
  size_t hi = chunk.size();
  while (lo < hi && is_split_punct(chunk[lo])) ++lo;
  while (hi > lo && is_split_punct(chunk[hi - 1])) --hi;
  for (size_t i = 0; i < lo; ++i) out->push_back(utf8::encode_one(chunk[i]));
  if (lo < hi) {
    out->push_back(
        utf8::encode(std::vector<char32_t>(chunk.begin() + lo, chunk.begin() + hi)));
  }
  for (size_t i = hi; i < chunk.size(); ++i)
    out->push_back(utf8::encode_one(chunk[i]));
}

}  // namespace

std::vector<Token> tokenize(std::string_view line) {
  std::vector<char32_t> scalars;
  if (!utf8::try_decode(line, &scalars)) {
    throw ParseError("invalid UTF-8 input line");
  }
  scalars = utf8::compose_latin(scalars);

  std::vector<std::string> parts;
  std::vector<char32_t> chunk;
  for (char32_t c : scalars) {
    if (utf8::is_whitespace(c)) {
      if (!chunk.empty()) {
        emit_chunk(chunk, &parts);
        chunk.clear();
      }
    } else if (!is_control(c)) {
      chunk.push_back(c);
    }
  }
  if (!chunk.empty()) emit_chunk(chunk, &parts);

  return to_tokens(parts);
}

std::vector<Token> to_tokens(const std::vector<std::string>& parts) {
  std::vector<Token> tokens;
  tokens.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    Token t;
    t.surface = parts[i];
    t.index = static_cast<int>(i);
    t.is_sentence_initial = (i == 0);
    std::vector<char32_t> sc = utf8::decode(parts[i]);
    t.is_capitalized = !sc.empty() && utf8::is_upper(sc.front());
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string s;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ' ';
    s += tokens[i].surface;
  }
  return s;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

bool is_punctuation_token(const std::string& surface) {
  std::vector<char32_t> sc = utf8::decode(surface);
  if (sc.empty()) return false;
  for (char32_t c : sc) {
    if (!is_split_punct(c)) return false;
  }
  return true;
}

Sentence make_sentence(std::string id, std::string_view target_line,
                       std::string source_text) {
  Sentence s;
  s.id = std::move(id);
  s.source_text = std::move(source_text);
  s.tokens = tokenize(target_line);
  return s;
}

}  // namespace contra
