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

#ifndef CONTRA_TESTSET_HPP_
#define CONTRA_TESTSET_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "contra/provenance.hpp"

namespace contra {

enum class Category {
  kNpAgreement,
  kSubjectVerb,
  kVerbParticle,
  kPolarity,
  kTransliteration,
};

inline constexpr Category kAllCategories[] = {
    Category::kNpAgreement, Category::kSubjectVerb, Category::kVerbParticle,
    Category::kPolarity, Category::kTransliteration};

const char* to_string(Category c);
Category parse_category(const std::string& s);

// A minimal edit on the reference token sequence: `length` tokens starting
// at `start` are replaced by `replacement` (empty = deletion, length 0 =
// insertion).
struct EditSpan {
  int start = 0;
  int length = 0;
  std::vector<std::string> replacement;

  bool operator==(const EditSpan&) const = default;
};

std::vector<std::string> apply_edit(const std::vector<std::string>& reference,
                                    const EditSpan& edit);

struct ContrastivePair {
  std::string pair_id;
  std::string sentence_id;
  Category category = Category::kNpAgreement;
  std::string subcategory;  // polarity only: {nicht,kein,un}_{insertion,deletion}
  std::string source_text;  // empty = not available
  std::vector<std::string> reference;
  std::vector<std::string> contrastive;
  EditSpan edit;
  std::optional<int> distance;        // agreement categories only
  std::optional<uint64_t> frequency;  // absent for nicht subcategories
  bool sie_ambiguous = false;
  std::string generator_rule;

  bool operator==(const ContrastivePair&) const = default;
};

// Throws InvalidError with a machine-readable "invariant=<code>" prefix when
// a stated invariant is violated.
void validate_pair(const ContrastivePair& pair);

// JSON Lines, UTF-8; first line is a schema header object carrying the
// provenance key/values. Returns the number of records written.
uint64_t write_pairs(const std::vector<ContrastivePair>& pairs,
                     std::ostream& out, const KvList& provenance);
uint64_t write_pairs_file(const std::vector<ContrastivePair>& pairs,
                          const std::string& path, const KvList& provenance);

// Validates every pair; errors carry the 1-based line number.
std::vector<ContrastivePair> read_pairs(std::istream& in);
std::vector<ContrastivePair> read_pairs_file(const std::string& path);

}  // namespace contra

#endif  // CONTRA_TESTSET_HPP_
