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

#ifndef CONTRA_STATS_HPP_
#define CONTRA_STATS_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "contra/provenance.hpp"
#include "contra/tokenizer.hpp"

namespace contra {

struct Lexicons;

// Training-corpus statistics gating the error injectors: surface-form
// frequencies and (finite verb, clause-final particle) co-occurrence counts.
// Lookups of absent keys return 0. Partial stats merge associatively.
struct CorpusStats {
  std::map<std::string, uint64_t> word_freq;
  std::map<std::pair<std::string, std::string>, uint64_t> verb_particle;
  uint64_t token_count = 0;
  uint64_t rejected_lines = 0;
  std::string normalization_tag = kNormalizationTag;

  uint64_t frequency(const std::string& form) const;
  uint64_t particle_count(const std::string& verb,
                          const std::string& particle) const;
  uint64_t vocab_size() const { return word_freq.size(); }

  void add_sentence(const Sentence& sentence, const Lexicons& lexicons);
  void add_line(const std::string& line, const Lexicons& lexicons);

  // Requires matching normalization tags; counts add.
  void merge(const CorpusStats& other);
};

// One sentence per line. Invalid UTF-8 lines are counted in rejected_lines
// and skipped. jobs > 1 fans out over contiguous line chunks; the result is
// identical to the sequential build.
CorpusStats build_stats(const std::vector<std::string>& lines,
                        const Lexicons& lexicons, int jobs = 1);
CorpusStats build_stats_file(const std::string& path, const Lexicons& lexicons,
                             int jobs = 1);

// stats.tsv: header line, then WORD and VP sections, keys sorted bytewise.
void write_stats(const CorpusStats& stats, std::ostream& out,
                 const KvList& provenance);
void write_stats_file(const CorpusStats& stats, const std::string& path,
                      const KvList& provenance);
CorpusStats read_stats(std::istream& in);
CorpusStats read_stats_file(const std::string& path);

}  // namespace contra

#endif  // CONTRA_STATS_HPP_
