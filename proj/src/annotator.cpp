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

#include "contra/annotator.hpp"

#include <algorithm>

#include "contra/utf8.hpp"

namespace contra {

namespace {

bool all_letters(const std::vector<char32_t>& sc) {
  if (sc.empty()) return false;
  return std::all_of(sc.begin(), sc.end(),
                     [](char32_t c) { return utf8::is_letter(c); });
}

bool is_alpha_word(const Token& t) {
  return all_letters(utf8::decode(t.surface));
}

bool is_lower_alpha_word(const Token& t) {
  std::vector<char32_t> sc = utf8::decode(t.surface);
  return all_letters(sc) && utf8::is_lower(sc.front());
}

// Surface used for lexicon lookups: sentence-initial capitalization is
// folded away, everything else is taken as written.
std::string lookup_form(const Token& t) {
  return t.is_sentence_initial ? fold_initial(t.surface) : t.surface;
}

constexpr int kMaxAttributeSkips = 3;  // adjectives between determiner and noun

}  // namespace

bool DeterminerAnalysis::case_number_unambiguous() const {
  if (readings.empty()) return false;
  const Reading& first = *readings.begin();
  return std::all_of(readings.begin(), readings.end(), [&](const Reading& r) {
    return r.case_ == first.case_ && r.number == first.number;
  });
}

std::string fold_initial(const std::string& surface) {
  std::vector<char32_t> sc = utf8::decode(surface);
  if (!sc.empty()) sc.front() = utf8::to_lower(sc.front());
  return utf8::encode(sc);
}

std::string match_case(const std::string& form, const std::string& shape) {
  std::vector<char32_t> fs = utf8::decode(form);
  std::vector<char32_t> ss = utf8::decode(shape);
  if (fs.empty() || ss.empty()) return form;
  fs.front() = utf8::is_upper(ss.front()) ? utf8::to_upper(fs.front())
                                          : utf8::to_lower(fs.front());
  return utf8::encode(fs);
}

std::string strip_un_prefix(const std::string& surface) {
  std::vector<char32_t> sc = utf8::decode(surface);
  if (sc.size() < 5 || !all_letters(sc)) return {};
  if ((sc[0] != U'u' && sc[0] != U'U') || sc[1] != U'n') return {};
  std::string rest = utf8::encode(std::vector<char32_t>(sc.begin() + 2, sc.end()));
  return match_case(rest, surface);
}

std::string attach_un_prefix(const std::string& surface) {
  std::vector<char32_t> sc = utf8::decode(surface);
  if (sc.size() < 3 || !all_letters(sc)) return {};
  if ((sc[0] == U'u' || sc[0] == U'U') && sc[1] == U'n') return {};
  if (utf8::is_upper(sc.front())) {
    sc.front() = utf8::to_lower(sc.front());
    return "Un" + utf8::encode(sc);
  }
  return "un" + utf8::encode(sc);
}

std::vector<DeterminerAnalysis> find_np_targets(const Sentence& sentence,
                                                const Lexicons& lexicons) {
  std::vector<DeterminerAnalysis> out;
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    auto it = lexicons.determiner_readings.find(lookup_form(tokens[i]));
    if (it == lexicons.determiner_readings.end()) continue;

    DeterminerAnalysis det;
    det.token_index = i;
    det.readings = it->second;
    if (!det.case_number_unambiguous()) continue;
    if (det.readings.begin()->number != Number::kSg) continue;

    // The determiner must introduce an NP: optionally attributes, then a
    // capitalized noun.
    int j = i + 1;
    int skips = 0;
    while (j < n && skips < kMaxAttributeSkips && is_lower_alpha_word(tokens[j]) &&
           !lexicons.verb_pairs.count(tokens[j].surface) &&
           !lexicons.prepositions.count(tokens[j].surface) &&
           !lexicons.skip_stop.count(tokens[j].surface)) {
      ++j;
      ++skips;
    }
    if (j >= n || !tokens[j].is_capitalized || !is_alpha_word(tokens[j])) continue;

    det.noun_index = j;
    out.push_back(std::move(det));
  }
  return out;
}

std::vector<SubjectVerbLink> find_sv_links(const Sentence& sentence,
                                           const Lexicons& lexicons) {
  std::vector<SubjectVerbLink> out;
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());

  for (int v = 0; v < n; ++v) {
    auto verb = lexicons.find_verb(lookup_form(tokens[v]));
    if (!verb) continue;

    int subject = -1;
    NumberCue cue = NumberCue::kAny;
    bool sie = false;

    for (int j = v - 1; j >= 0 && subject < 0; --j) {
      const Token& tj = tokens[j];
      if (is_punctuation_token(tj.surface)) break;  // clause boundary
      const std::string lf = lookup_form(tj);

      if (lexicons.pronouns_ambig.count(tj.surface) ||
          lexicons.pronouns_ambig.count(lf)) {
        subject = j;
        cue = NumberCue::kAny;
        sie = true;
        break;
      }
      if (lexicons.pronouns_sg.count(lf)) {
        subject = j;
        cue = NumberCue::kSg;
        break;
      }
      if (lexicons.pronouns_pl.count(lf)) {
        subject = j;
        cue = NumberCue::kPl;
        break;
      }
      // der/die/das directly before the verb act as (relative) pronouns.
      if (j == v - 1) {
        auto adj = lexicons.pronoun_adjacent.find(lf);
        if (adj != lexicons.pronoun_adjacent.end()) {
          subject = j;
          cue = adj->second;
          break;
        }
      }
      if (tj.is_capitalized && is_alpha_word(tj) && !tj.is_sentence_initial) {
        // Candidate head noun: accept only with a nominative-capable
        // determiner in front, not governed by a preposition.
        int k = j - 1;
        int skips = 0;
        while (k >= 0 && skips < kMaxAttributeSkips &&
               is_lower_alpha_word(tokens[k]) &&
               !lexicons.det_nominative.count(lookup_form(tokens[k])) &&
               !lexicons.det_blocked.count(lookup_form(tokens[k])) &&
               !lexicons.prepositions.count(lookup_form(tokens[k])) &&
               !lexicons.verb_pairs.count(lookup_form(tokens[k]))) {
          --k;
          ++skips;
        }
        if (k >= 0) {
          const std::string dk = lookup_form(tokens[k]);
          auto det = lexicons.det_nominative.find(dk);
          if (det != lexicons.det_nominative.end() &&
              !(k > 0 && lexicons.prepositions.count(lookup_form(tokens[k - 1])))) {
            subject = j;
            cue = det->second;
            break;
          }
        }
        // Bare or non-nominative noun: keep scanning left.
      }
    }

    if (subject < 0) continue;
    if (cue == NumberCue::kSg && verb->number != Number::kSg) continue;
    if (cue == NumberCue::kPl && verb->number != Number::kPl) continue;

    SubjectVerbLink link;
    link.subject_index = subject;
    link.verb_index = v;
    link.verb_number = verb->number;
    link.distance = v - subject;
    link.sie_ambiguous = sie;
    out.push_back(link);
  }
  return out;
}

std::vector<ParticleOccurrence> find_particles(const Sentence& sentence,
                                               const Lexicons& lexicons) {
  std::vector<ParticleOccurrence> out;
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());

  for (int j = 1; j < n; ++j) {
    if (!lexicons.is_particle(tokens[j].surface)) continue;
    const bool clause_final =
        j + 1 == n || is_punctuation_token(tokens[j + 1].surface);
    if (!clause_final) continue;

    int verb = -1;
    for (int k = j - 1; k >= 0; --k) {
      if (is_punctuation_token(tokens[k].surface)) break;
      if (lexicons.find_verb(lookup_form(tokens[k]))) {
        verb = k;
        break;
      }
    }
    if (verb < 0) continue;

    ParticleOccurrence occ;
    occ.verb_index = verb;
    occ.particle_index = j;
    occ.verb_form = tokens[verb].surface;
    occ.particle = tokens[j].surface;
    out.push_back(std::move(occ));
  }
  return out;
}

std::vector<NegationSite> find_negation_sites(const Sentence& sentence,
                                              const CorpusStats& stats,
                                              const Lexicons& lexicons) {
  std::vector<NegationSite> sites;
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());
  bool has_negation_material = false;

  for (int i = 0; i < n; ++i) {
    const Token& tok = tokens[i];
    const std::string lf = lookup_form(tok);

    if (lf == "nicht") {
      sites.push_back({NegationKind::kNichtToken, i, NegationDirection::kDelete});
      has_negation_material = true;
      continue;
    }

    auto ek = lexicons.ein_kein.find(lf);
    if (ek != lexicons.ein_kein.end()) {
      const bool positive = lexicons.ein_forms.count(lf) != 0;
      if (!positive) has_negation_material = true;
      // Determiner reading requires a following word; clause-final "ein"
      // is a separable particle, not an article.
      if (i + 1 < n && is_alpha_word(tokens[i + 1])) {
        sites.push_back({NegationKind::kEinKeinDeterminer, i,
                         positive ? NegationDirection::kInsert
                                  : NegationDirection::kDelete});
        if (positive) has_negation_material = true;
      }
      continue;
    }

    std::string stripped = strip_un_prefix(tok.surface);
    if (!stripped.empty()) {
      if (stats.frequency(stripped) >= 1 && stats.frequency(tok.surface) >= 1) {
        sites.push_back(
            {NegationKind::kUnPrefixWord, i, NegationDirection::kDelete});
        has_negation_material = true;
      }
      continue;
    }

    std::string prefixed = attach_un_prefix(tok.surface);
    if (!prefixed.empty() && stats.frequency(tok.surface) >= 1 &&
        stats.frequency(prefixed) >= 1) {
      sites.push_back(
          {NegationKind::kUnPrefixWord, i, NegationDirection::kInsert});
    }
  }

  // nicht is only inserted into sentences free of other negation material,
  // at the first finite verb, so the polarity flip is clean.
  if (!has_negation_material) {
    for (int v = 0; v < n; ++v) {
      if (lexicons.find_verb(lookup_form(tokens[v]))) {
        sites.push_back(
            {NegationKind::kNichtToken, v, NegationDirection::kInsert});
        break;
      }
    }
  }

  std::sort(sites.begin(), sites.end(), [](const NegationSite& a,
                                           const NegationSite& b) {
    if (a.token_index != b.token_index) return a.token_index < b.token_index;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.direction_available < b.direction_available;
  });
  return sites;
}

std::vector<NameCandidate> find_unseen_names(const Sentence& sentence,
                                             const CorpusStats& stats) {
  std::vector<NameCandidate> out;
  for (const Token& tok : sentence.tokens) {
    if (tok.is_sentence_initial || !tok.is_capitalized) continue;
    std::vector<char32_t> sc = utf8::decode(tok.surface);
    if (sc.size() < 4 || !all_letters(sc)) continue;
    if (stats.frequency(tok.surface) != 0) continue;
    out.push_back({tok.index, tok.surface, 0});
  }
  return out;
}

AnnotatedSentence HeuristicAnnotator::annotate(const Sentence& sentence,
                                               const CorpusStats& stats,
                                               const Lexicons& lexicons) const {
  AnnotatedSentence a;
  a.sentence = sentence;
  a.np_targets = find_np_targets(sentence, lexicons);
  a.sv_links = find_sv_links(sentence, lexicons);
  a.particles = find_particles(sentence, lexicons);
  a.negation_sites = find_negation_sites(sentence, stats, lexicons);
  a.name_candidates = find_unseen_names(sentence, stats);
  return a;
}

}  // namespace contra
