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

#ifndef CONTRA_SEGMENTATION_HPP_
#define CONTRA_SEGMENTATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "contra/provenance.hpp"
#include "contra/tokenizer.hpp"

namespace contra {

enum class Scheme { kWord, kBpe, kChar };

const char* to_string(Scheme s);
Scheme parse_scheme(const std::string& s);

// A subword unit. word_end marks the last symbol of a word; keeping the
// marker out of the text makes reconstruction exact for arbitrary input.
struct Symbol {
  std::string text;
  bool word_end = false;

  auto operator<=>(const Symbol&) const = default;

  // Unambiguous textual form: backslash escapes + "</w>" suffix convention.
  std::string render() const;
};

struct SymbolSequence {
  Scheme scheme = Scheme::kWord;
  std::vector<Symbol> symbols;

  size_t count() const { return symbols.size(); }
  // Inverts the segmentation exactly.
  std::vector<std::string> reconstruct_words() const;
};

struct BpeModel {
  std::vector<std::pair<Symbol, Symbol>> merges;
  uint32_t vocab_goal = 0;  // requested merge count
  std::string end_marker = "suffix-eow";

  SymbolSequence apply_word(const std::string& word) const;
  SymbolSequence apply(const std::vector<Token>& tokens) const;
};

// Greedy most-frequent-pair merging over a word-frequency dictionary.
// Ties break on the bytewise-lexicographic order of the rendered pair.
// Stops early once no pair occurs at least twice. Throws on empty input.
BpeModel bpe_learn(const std::map<std::string, uint64_t>& word_freq,
                   uint32_t merge_count);
BpeModel bpe_learn_corpora(const std::vector<std::string>& corpus_paths,
                           uint32_t merge_count);

SymbolSequence word_segment(const std::vector<Token>& tokens);
// One symbol per Unicode scalar; inter-token spaces become explicit
// space symbols.
SymbolSequence char_segment(const std::vector<Token>& tokens);

void write_bpe_model(const BpeModel& model, std::ostream& out,
                     const KvList& provenance);
void write_bpe_model_file(const BpeModel& model, const std::string& path,
                          const KvList& provenance);
BpeModel read_bpe_model(std::istream& in);
BpeModel read_bpe_model_file(const std::string& path);

// Backslash escaping shared by the model and LM file formats: \t, \n, \r,
// backslash itself, '<' (so the "</w>" suffix stays unambiguous) and other
// control bytes as \xHH.
std::string escape_symbol_text(const std::string& raw);
std::string unescape_symbol_text(const std::string& escaped);
Symbol parse_rendered_symbol(const std::string& rendered);

}  // namespace contra

#endif  // CONTRA_SEGMENTATION_HPP_
