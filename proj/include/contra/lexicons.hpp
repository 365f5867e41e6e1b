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

#ifndef CONTRA_LEXICONS_HPP_
#define CONTRA_LEXICONS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace contra {

enum class Case { kNom, kAcc, kDat, kGen };
enum class Number { kSg, kPl };
enum class Gender { kMasc, kFem, kNeut };

const char* to_string(Case c);
const char* to_string(Number n);
const char* to_string(Gender g);

struct Reading {
  Case case_;
  Number number;
  Gender gender;

  auto operator<=>(const Reading&) const = default;
};

struct VerbEntry {
  std::string counterpart;  // the number-swapped form
  Number number;            // grammatical number of this form
};

// Grammatical number suggested by a subject cue; kAny means no commitment.
enum class NumberCue { kSg, kPl, kAny };

// Lexicon bundle backing the heuristic annotator. Content is ordinary
// German grammar shipped as TSV data files; see data/lexicons/.
struct Lexicons {
  // Definite-article paradigm: surface -> readings, plus reverse lookup.
  std::map<std::string, std::set<Reading>> determiner_readings;
  std::map<Reading, std::string> determiner_form;

  // 3rd-person finite verb forms, both numbers: form -> counterpart.
  std::map<std::string, VerbEntry> verb_pairs;

  // Separable verb particles.
  std::set<std::string> particles;

  // ein <-> kein, bidirectional (all six inflected forms each way).
  std::map<std::string, std::string> ein_kein;
  std::set<std::string> ein_forms;  // the positive-polarity side

  // Subject heuristic cues.
  std::set<std::string> pronouns_sg;
  std::set<std::string> pronouns_pl;
  std::set<std::string> pronouns_ambig;       // sie / Sie
  std::map<std::string, NumberCue> pronoun_adjacent;  // der/die/das before verb
  std::map<std::string, NumberCue> det_nominative;    // nominative-capable dets
  std::set<std::string> det_blocked;          // unambiguously non-nominative
  std::set<std::string> prepositions;
  std::set<std::string> clitic_pronouns;      // cluster after a finite verb
  std::set<std::string> skip_stop;            // never part of an NP continuation

  std::optional<std::string> determiner_surface(Case c, Number n, Gender g) const;
  std::optional<VerbEntry> find_verb(const std::string& surface) const;
  bool is_particle(const std::string& surface) const;

  // Loads all lexicon files from a directory and validates the invariants
  // (bidirectional verb pairs, ein/kein bijection). Throws on violation.
  static Lexicons load(const std::string& dir);
};

}  // namespace contra

#endif  // CONTRA_LEXICONS_HPP_
