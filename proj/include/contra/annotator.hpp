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

#ifndef CONTRA_ANNOTATOR_HPP_
#define CONTRA_ANNOTATOR_HPP_

#include <set>
#include <string>
#include <vector>

#include "contra/lexicons.hpp"
#include "contra/stats.hpp"
#include "contra/tokenizer.hpp"

namespace contra {

// A definite determiner eligible for a gender flip: singular in all its
// paradigm readings, with case and number unambiguous at the form level.
struct DeterminerAnalysis {
  int token_index = 0;
  std::set<Reading> readings;
  bool is_definite = true;
  int noun_index = 0;  // head noun the determiner introduces

  bool case_number_unambiguous() const;
};

struct SubjectVerbLink {
  int subject_index = 0;
  int verb_index = 0;
  Number verb_number = Number::kSg;
  int distance = 0;  // |verb_index - subject_index|, in tokens
  bool sie_ambiguous = false;
};

struct ParticleOccurrence {
  int verb_index = 0;
  int particle_index = 0;  // always after the verb, clause-final
  std::string verb_form;
  std::string particle;
};

enum class NegationKind { kNichtToken, kEinKeinDeterminer, kUnPrefixWord };
enum class NegationDirection { kInsert, kDelete, kBoth };

struct NegationSite {
  NegationKind kind = NegationKind::kNichtToken;
  int token_index = 0;
  NegationDirection direction_available = NegationDirection::kDelete;
};

// Capitalized, non-sentence-initial, alphabetic token of length >= 4 that
// never occurs in the training corpus.
struct NameCandidate {
  int token_index = 0;
  std::string surface;
  uint64_t training_frequency = 0;
};

struct AnnotatedSentence {
  Sentence sentence;
  std::vector<DeterminerAnalysis> np_targets;
  std::vector<SubjectVerbLink> sv_links;
  std::vector<ParticleOccurrence> particles;
  std::vector<NegationSite> negation_sites;
  std::vector<NameCandidate> name_candidates;
};

// Pluggable analysis interface. The bundled HeuristicAnnotator is a
// high-precision, lexicon-driven approximation; a real parser or
// morphological analyzer can be substituted behind the same interface.
class Annotator {
 public:
  virtual ~Annotator() = default;
  virtual AnnotatedSentence annotate(const Sentence& sentence,
                                     const CorpusStats& stats,
                                     const Lexicons& lexicons) const = 0;
};

class HeuristicAnnotator : public Annotator {
 public:
  AnnotatedSentence annotate(const Sentence& sentence, const CorpusStats& stats,
                             const Lexicons& lexicons) const override;
};

// The individual detectors, usable without composing a full annotation.
// All are pure functions of their arguments.
std::vector<DeterminerAnalysis> find_np_targets(const Sentence& sentence,
                                                const Lexicons& lexicons);
std::vector<SubjectVerbLink> find_sv_links(const Sentence& sentence,
                                           const Lexicons& lexicons);
std::vector<ParticleOccurrence> find_particles(const Sentence& sentence,
                                               const Lexicons& lexicons);
std::vector<NegationSite> find_negation_sites(const Sentence& sentence,
                                              const CorpusStats& stats,
                                              const Lexicons& lexicons);
std::vector<NameCandidate> find_unseen_names(const Sentence& sentence,
                                             const CorpusStats& stats);

// Case-transfer helpers shared with the injectors: the first scalar of
// `shape` decides the casing of `form`'s first scalar.
std::string match_case(const std::string& form, const std::string& shape);
std::string fold_initial(const std::string& surface);  // lowercase first scalar

// Strips/attaches the negation prefix; empty result when not applicable.
std::string strip_un_prefix(const std::string& surface);
std::string attach_un_prefix(const std::string& surface);

}  // namespace contra

#endif  // CONTRA_ANNOTATOR_HPP_
