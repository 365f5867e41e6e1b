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

#include "contra/lexicons.hpp"

#include <fstream>

#include "contra/error.hpp"
#include "contra/provenance.hpp"
#include "contra/utf8.hpp"

namespace contra {

const char* to_string(Case c) {
  switch (c) {
    case Case::kNom: return "nom";
    case Case::kAcc: return "acc";
    case Case::kDat: return "dat";
    case Case::kGen: return "gen";
  }
  return "?";
}

const char* to_string(Number n) {
  return n == Number::kSg ? "sg" : "pl";
}

const char* to_string(Gender g) {
  switch (g) {
    case Gender::kMasc: return "masc";
    case Gender::kFem: return "fem";
    case Gender::kNeut: return "neut";
  }
  return "?";
}

namespace {

Case parse_case(const std::string& s, const std::string& where) {
  if (s == "nom") return Case::kNom;
  if (s == "acc") return Case::kAcc;
  if (s == "dat") return Case::kDat;
  if (s == "gen") return Case::kGen;
  throw ParseError(where + ": unknown case '" + s + "'");
}

Number parse_number(const std::string& s, const std::string& where) {
  if (s == "sg") return Number::kSg;
  if (s == "pl") return Number::kPl;
  throw ParseError(where + ": unknown number '" + s + "'");
}

Gender parse_gender(const std::string& s, const std::string& where) {
  if (s == "masc") return Gender::kMasc;
  if (s == "fem") return Gender::kFem;
  if (s == "neut") return Gender::kNeut;
  throw ParseError(where + ": unknown gender '" + s + "'");
}

NumberCue parse_cue(const std::string& s, const std::string& where) {
  if (s == "sg") return NumberCue::kSg;
  if (s == "pl") return NumberCue::kPl;
  if (s == "any") return NumberCue::kAny;
  throw ParseError(where + ": unknown number cue '" + s + "'");
}

// Reads a lexicon TSV: '#'-prefixed header/comment lines skipped (the first
// must carry type=<expect>), blank lines skipped, fields tab-separated.
std::vector<std::vector<std::string>> read_lexicon_rows(
    const std::string& path, const std::string& expect_type) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool saw_type = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("type=" + expect_type) != std::string::npos) saw_type = true;
      continue;
    }
    rows.push_back(split(line, '\t'));
  }
  if (!saw_type) {
    throw ParseError(path + ": missing 'type=" + expect_type + "' header");
  }
  return rows;
}

// Derives the 3rd-person-plural form of a regular 3rd-person-singular verb.
// Irregular verbs carry an explicit plural column instead.
std::string derive_plural(const std::string& sg) {
  auto ends_with = [&](const char* suffix) {
    size_t n = std::string(suffix).size();
    return sg.size() > n && sg.compare(sg.size() - n, n, suffix) == 0;
  };
  if (ends_with("elt")) return sg.substr(0, sg.size() - 1) + "n";   // sammelt -> sammeln
  if (ends_with("ert")) return sg.substr(0, sg.size() - 1) + "n";   // dauert -> dauern
  if (ends_with("et")) return sg.substr(0, sg.size() - 1) + "n";    // redet -> reden
  if (ends_with("te")) return sg + "n";                             // machte -> machten
  if (ends_with("t")) return sg.substr(0, sg.size() - 1) + "en";    // kommt -> kommen
  throw ParseError("cannot derive plural of verb form '" + sg +
                   "'; add an explicit plural column");
}

}  // namespace

std::optional<std::string> Lexicons::determiner_surface(Case c, Number n,
                                                        Gender g) const {
  auto it = determiner_form.find(Reading{c, n, g});
  if (it == determiner_form.end()) return std::nullopt;
  return it->second;
}

std::optional<VerbEntry> Lexicons::find_verb(const std::string& surface) const {
  auto it = verb_pairs.find(surface);
  if (it == verb_pairs.end()) return std::nullopt;
  return it->second;
}

bool Lexicons::is_particle(const std::string& surface) const {
  return particles.count(surface) != 0;
}

Lexicons Lexicons::load(const std::string& dir) {
  Lexicons lex;

  for (const auto& row : read_lexicon_rows(dir + "/determiners.tsv", "determiners")) {
    if (row.size() != 5) {
      throw ParseError("determiners.tsv: expected 5 columns");
    }
    Reading r{parse_case(row[1], "determiners.tsv"),
              parse_number(row[2], "determiners.tsv"),
              parse_gender(row[3], "determiners.tsv")};
    lex.determiner_readings[row[0]].insert(r);
    lex.determiner_form[r] = row[0];
  }

  auto put_verb = [&lex](const std::string& form, VerbEntry entry) {
    auto [it, inserted] = lex.verb_pairs.emplace(form, entry);
    if (!inserted && (it->second.counterpart != entry.counterpart ||
                      it->second.number != entry.number)) {
      throw ParseError("verbs.tsv: form '" + form +
                       "' appears in two conflicting pairs");
    }
  };
  for (const auto& row : read_lexicon_rows(dir + "/verbs.tsv", "verbs")) {
    if (row.empty() || row.size() > 2) {
      throw ParseError("verbs.tsv: expected 1-2 columns");
    }
    const std::string& sg = row[0];
    std::string pl = row.size() == 2 ? row[1] : derive_plural(sg);
    if (sg == pl) {
      throw ParseError("verbs.tsv: pair '" + sg + "' is not form-distinct");
    }
    put_verb(sg, VerbEntry{pl, Number::kSg});
    put_verb(pl, VerbEntry{sg, Number::kPl});
  }

  for (const auto& row : read_lexicon_rows(dir + "/particles.tsv", "particles")) {
    lex.particles.insert(row[0]);
  }
  if (lex.particles.empty()) {
    throw InvalidError("particle lexicon is empty");
  }

  for (const auto& row : read_lexicon_rows(dir + "/ein_kein.tsv", "ein_kein")) {
    if (row.size() != 2) throw ParseError("ein_kein.tsv: expected 2 columns");
    if (lex.ein_kein.count(row[0]) || lex.ein_kein.count(row[1])) {
      throw ParseError("ein_kein.tsv: duplicate form breaks the bijection");
    }
    lex.ein_kein[row[0]] = row[1];
    lex.ein_kein[row[1]] = row[0];
    lex.ein_forms.insert(row[0]);
  }

  for (const auto& row : read_lexicon_rows(dir + "/subject_markers.tsv",
                                           "subject_markers")) {
    if (row.size() < 2) throw ParseError("subject_markers.tsv: expected 2+ columns");
    const std::string& kind = row[0];
    const std::string& form = row[1];
    if (kind == "PRON_SG") {
      lex.pronouns_sg.insert(form);
    } else if (kind == "PRON_PL") {
      lex.pronouns_pl.insert(form);
    } else if (kind == "PRON_AMBIG") {
      lex.pronouns_ambig.insert(form);
    } else if (kind == "PRON_ADJACENT") {
      lex.pronoun_adjacent[form] =
          parse_cue(row.at(2), "subject_markers.tsv");
    } else if (kind == "DET_NOM") {
      lex.det_nominative[form] = parse_cue(row.at(2), "subject_markers.tsv");
    } else if (kind == "DET_BLOCK") {
      lex.det_blocked.insert(form);
    } else if (kind == "PREP") {
      lex.prepositions.insert(form);
    } else if (kind == "CLITIC") {
      lex.clitic_pronouns.insert(form);
    } else if (kind == "SKIP_STOP") {
      lex.skip_stop.insert(form);
    } else {
      throw ParseError("subject_markers.tsv: unknown kind '" + kind + "'");
    }
  }

  return lex;
}

}  // namespace contra
