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

#include "contra/injectors.hpp"

#include <algorithm>
#include <iostream>
#include <thread>

#include "contra/error.hpp"
#include "contra/utf8.hpp"

namespace contra {

namespace {

ContrastivePair base_pair(const Sentence& sentence, Category category,
                          size_t site_index) {
  ContrastivePair p;
  p.sentence_id = sentence.id;
  p.pair_id = sentence.id + ":" + to_string(category) + ":" +
              std::to_string(site_index);
  p.category = category;
  p.source_text = sentence.source_text;
  p.reference = surfaces(sentence.tokens);
  return p;
}

void finish_pair(ContrastivePair* p, EditSpan edit) {
  p->edit = std::move(edit);
  p->contrastive = apply_edit(p->reference, p->edit);
}

}  // namespace

std::optional<ContrastivePair> inject_np_agreement(
    const Sentence& sentence, const DeterminerAnalysis& target,
    const CorpusStats& stats, const Lexicons& lexicons, SiteRng& rng) {
  const Token& det = sentence.tokens.at(target.token_index);
  const std::string lookup =
      det.is_sentence_initial ? fold_initial(det.surface) : det.surface;
  const Reading& shared = *target.readings.begin();

  std::set<Gender> present;
  for (const Reading& r : target.readings) present.insert(r.gender);

  std::vector<std::string> candidates;
  for (Gender g : {Gender::kMasc, Gender::kFem, Gender::kNeut}) {
    if (present.count(g)) continue;
    auto form = lexicons.determiner_surface(shared.case_, shared.number, g);
    if (form && *form != lookup) candidates.push_back(*form);
  }
  if (candidates.empty()) return std::nullopt;

  const std::string& picked = candidates[rng.bounded(candidates.size())];
  ContrastivePair p = base_pair(sentence, Category::kNpAgreement, 0);
  p.distance = target.noun_index - target.token_index;
  p.frequency = stats.frequency(det.surface);
  p.generator_rule = "np:gender-flip/1";
  finish_pair(&p, {target.token_index, 1, {match_case(picked, det.surface)}});
  return p;
}

std::optional<ContrastivePair> inject_sv_agreement(const Sentence& sentence,
                                                   const SubjectVerbLink& link,
                                                   const CorpusStats& stats,
                                                   const Lexicons& lexicons) {
  const Token& verb = sentence.tokens.at(link.verb_index);
  auto entry = lexicons.find_verb(
      verb.is_sentence_initial ? fold_initial(verb.surface) : verb.surface);
  if (!entry) return std::nullopt;

  std::string swapped = match_case(entry->counterpart, verb.surface);
  if (swapped == verb.surface) return std::nullopt;

  ContrastivePair p = base_pair(sentence, Category::kSubjectVerb, 0);
  p.distance = link.distance;
  p.frequency = stats.frequency(verb.surface);
  p.sie_ambiguous = link.sie_ambiguous;
  p.generator_rule = "sv:number-swap/1";
  finish_pair(&p, {link.verb_index, 1, {std::move(swapped)}});
  return p;
}

std::optional<ContrastivePair> inject_particle(const Sentence& sentence,
                                               const ParticleOccurrence& occ,
                                               const CorpusStats& stats,
                                               const Lexicons& lexicons,
                                               SiteRng& rng) {
  std::vector<std::string> unseen;
  for (const std::string& p : lexicons.particles) {
    if (p != occ.particle && stats.particle_count(occ.verb_form, p) == 0) {
      unseen.push_back(p);
    }
  }
  if (unseen.empty()) return std::nullopt;

  const std::string& picked = unseen[rng.bounded(unseen.size())];
  ContrastivePair p = base_pair(sentence, Category::kVerbParticle, 0);
  p.frequency = std::min(stats.frequency(occ.verb_form),
                         stats.frequency(occ.particle));
  p.generator_rule = "vp:unseen-particle/1";
  finish_pair(&p, {occ.particle_index, 1, {picked}});
  return p;
}

namespace {

// nicht goes after the finite verb and its clitic pronoun cluster; for a
// clause-final verb in non-second position (verb-final subordinate clauses)
// it goes directly before the verb instead.
EditSpan nicht_insertion_edit(const Sentence& sentence, int verb_index,
                              const Lexicons& lexicons, std::string* rule) {
  const auto& tokens = sentence.tokens;
  const int n = static_cast<int>(tokens.size());

  int clause_start = 0;
  for (int i = verb_index - 1; i >= 0; --i) {
    if (is_punctuation_token(tokens[i].surface)) {
      clause_start = i + 1;
      break;
    }
  }
  const bool clause_final =
      verb_index + 1 == n || is_punctuation_token(tokens[verb_index + 1].surface);

  if (clause_final && verb_index - clause_start > 1) {
    *rule = "neg:nicht-insert-preverb/1";
    return {verb_index, 0, {"nicht"}};
  }
  int pos = verb_index + 1;
  while (pos < n && lexicons.clitic_pronouns.count(tokens[pos].surface)) ++pos;
  *rule = "neg:nicht-insert-postverb/1";
  return {pos, 0, {"nicht"}};
}

}  // namespace

std::optional<ContrastivePair> inject_polarity(const Sentence& sentence,
                                               const NegationSite& site,
                                               NegationDirection direction,
                                               const Lexicons& lexicons,
                                               const CorpusStats& stats) {
  if (direction == NegationDirection::kBoth) {
    throw UsageError("inject_polarity needs a concrete direction");
  }
  if (site.direction_available != NegationDirection::kBoth &&
      site.direction_available != direction) {
    throw UsageError("direction not available at this negation site");
  }

  const Token& tok = sentence.tokens.at(site.token_index);
  ContrastivePair p = base_pair(sentence, Category::kPolarity, 0);

  switch (site.kind) {
    case NegationKind::kNichtToken: {
      if (direction == NegationDirection::kDelete) {
        p.subcategory = "nicht_deletion";
        p.generator_rule = "neg:nicht-delete/1";
        finish_pair(&p, {site.token_index, 1, {}});
      } else {
        p.subcategory = "nicht_insertion";
        EditSpan edit =
            nicht_insertion_edit(sentence, site.token_index, lexicons,
                                 &p.generator_rule);
        finish_pair(&p, std::move(edit));
      }
      return p;
    }
    case NegationKind::kEinKeinDeterminer: {
      const std::string lf = tok.is_sentence_initial ? fold_initial(tok.surface)
                                                     : tok.surface;
      auto it = lexicons.ein_kein.find(lf);
      if (it == lexicons.ein_kein.end()) return std::nullopt;
      std::string swapped = match_case(it->second, tok.surface);
      p.subcategory = direction == NegationDirection::kInsert ? "kein_insertion"
                                                              : "kein_deletion";
      p.frequency = std::min(stats.frequency(tok.surface),
                             stats.frequency(swapped));
      p.generator_rule = "neg:ein-kein-swap/1";
      finish_pair(&p, {site.token_index, 1, {std::move(swapped)}});
      return p;
    }
    case NegationKind::kUnPrefixWord: {
      std::string flipped = direction == NegationDirection::kDelete
                                ? strip_un_prefix(tok.surface)
                                : attach_un_prefix(tok.surface);
      if (flipped.empty()) return std::nullopt;
      if (stats.frequency(flipped) < 1 || stats.frequency(tok.surface) < 1) {
        return std::nullopt;  // attestation gate
      }
      p.subcategory = direction == NegationDirection::kDelete ? "un_deletion"
                                                              : "un_insertion";
      p.frequency = std::min(stats.frequency(tok.surface),
                             stats.frequency(flipped));
      p.generator_rule = direction == NegationDirection::kDelete
                             ? "neg:un-strip/1"
                             : "neg:un-prefix/1";
      finish_pair(&p, {site.token_index, 1, {std::move(flipped)}});
      return p;
    }
  }
  return std::nullopt;
}

std::optional<ContrastivePair> inject_transliteration(const Sentence& sentence,
                                                      const NameCandidate& cand,
                                                      SiteRng& rng) {
  std::vector<char32_t> sc = utf8::decode(cand.surface);
  std::vector<size_t> positions;
  // The first character never moves, so swaps start at index 1.
  for (size_t i = 1; i + 1 < sc.size(); ++i) {
    if (sc[i] != sc[i + 1]) positions.push_back(i);
  }
  if (positions.empty()) return std::nullopt;

  size_t i = positions[rng.bounded(positions.size())];
  std::swap(sc[i], sc[i + 1]);

  ContrastivePair p = base_pair(sentence, Category::kTransliteration, 0);
  p.frequency = 0;
  p.generator_rule = "tr:swap-adjacent/1";
  finish_pair(&p, {cand.token_index, 1, {utf8::encode(sc)}});
  return p;
}

namespace {

void set_site_index(ContrastivePair* p, size_t site_index) {
  p->pair_id = p->sentence_id + ":" + to_string(p->category) + ":" +
               std::to_string(site_index);
}

}  // namespace

std::vector<ContrastivePair> generate_for_sentence(
    const AnnotatedSentence& annotated, const CorpusStats& stats,
    const Lexicons& lexicons, const InjectionConfig& config) {
  const Sentence& sentence = annotated.sentence;
  std::vector<ContrastivePair> out;

  auto emit = [&](Category category, std::vector<ContrastivePair> pairs) {
    uint64_t limit = config.max_pairs_per_sentence_per_category;
    if (limit > 0 && pairs.size() > limit) pairs.resize(limit);
    for (ContrastivePair& p : pairs) {
      validate_pair(p);
      out.push_back(std::move(p));
    }
    (void)category;
  };

  if (config.enabled_categories.count(Category::kNpAgreement)) {
    std::vector<ContrastivePair> pairs;
    for (size_t i = 0; i < annotated.np_targets.size(); ++i) {
      SiteRng rng = SiteRng::for_site(config.rng_seed, sentence.id,
                                      "np_agreement", i);
      if (auto p = inject_np_agreement(sentence, annotated.np_targets[i], stats,
                                       lexicons, rng)) {
        set_site_index(&*p, i);
        pairs.push_back(std::move(*p));
      }
    }
    emit(Category::kNpAgreement, std::move(pairs));
  }

  if (config.enabled_categories.count(Category::kSubjectVerb)) {
    std::vector<ContrastivePair> pairs;
    for (size_t i = 0; i < annotated.sv_links.size(); ++i) {
      if (auto p = inject_sv_agreement(sentence, annotated.sv_links[i], stats,
                                       lexicons)) {
        set_site_index(&*p, i);
        pairs.push_back(std::move(*p));
      }
    }
    emit(Category::kSubjectVerb, std::move(pairs));
  }

  if (config.enabled_categories.count(Category::kVerbParticle)) {
    std::vector<ContrastivePair> pairs;
    for (size_t i = 0; i < annotated.particles.size(); ++i) {
      SiteRng rng = SiteRng::for_site(config.rng_seed, sentence.id,
                                      "verb_particle", i);
      if (auto p = inject_particle(sentence, annotated.particles[i], stats,
                                   lexicons, rng)) {
        set_site_index(&*p, i);
        pairs.push_back(std::move(*p));
      }
    }
    emit(Category::kVerbParticle, std::move(pairs));
  }

  if (config.enabled_categories.count(Category::kPolarity)) {
    // Expand a both-direction site into two separate sites.
    std::vector<std::pair<NegationSite, NegationDirection>> expanded;
    for (const NegationSite& site : annotated.negation_sites) {
      if (site.direction_available == NegationDirection::kBoth) {
        expanded.push_back({site, NegationDirection::kDelete});
        expanded.push_back({site, NegationDirection::kInsert});
      } else {
        expanded.push_back({site, site.direction_available});
      }
    }
    std::vector<ContrastivePair> pairs;
    for (size_t i = 0; i < expanded.size(); ++i) {
      if (auto p = inject_polarity(sentence, expanded[i].first,
                                   expanded[i].second, lexicons, stats)) {
        set_site_index(&*p, i);
        pairs.push_back(std::move(*p));
      }
    }
    emit(Category::kPolarity, std::move(pairs));
  }

  if (config.enabled_categories.count(Category::kTransliteration)) {
    std::vector<ContrastivePair> pairs;
    for (size_t i = 0; i < annotated.name_candidates.size(); ++i) {
      SiteRng rng = SiteRng::for_site(config.rng_seed, sentence.id,
                                      "transliteration", i);
      if (auto p = inject_transliteration(sentence, annotated.name_candidates[i],
                                          rng)) {
        set_site_index(&*p, i);
        pairs.push_back(std::move(*p));
      }
    }
    emit(Category::kTransliteration, std::move(pairs));
  }

  return out;
}

std::vector<ContrastivePair> generate_all(const std::vector<Sentence>& sentences,
                                          const CorpusStats& stats,
                                          const Lexicons& lexicons,
                                          const InjectionConfig& config,
                                          const Annotator& annotator,
                                          int jobs) {
  if (stats.normalization_tag != kNormalizationTag) {
    throw InvalidError(
        "stats were built with normalization '" + stats.normalization_tag +
        "' but this build tokenizes with '" + kNormalizationTag + "'");
  }
  if (jobs < 1) jobs = 1;

  const size_t n = sentences.size();
  std::vector<std::vector<ContrastivePair>> per_sentence(n);

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      try {
        AnnotatedSentence annotated =
            annotator.annotate(sentences[i], stats, lexicons);
        per_sentence[i] =
            generate_for_sentence(annotated, stats, lexicons, config);
      } catch (const std::exception& e) {
        std::cerr << "warning: skipping sentence '" << sentences[i].id
                  << "': " << e.what() << '\n';
      }
    }
  };

  if (jobs == 1 || n < 2 * static_cast<size_t>(jobs)) {
    work(0, n);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) {
      threads.emplace_back(work, n * j / jobs, n * (j + 1) / jobs);
    }
    for (auto& t : threads) t.join();
  }

  std::vector<ContrastivePair> out;
  for (auto& pairs : per_sentence) {
    out.insert(out.end(), std::make_move_iterator(pairs.begin()),
               std::make_move_iterator(pairs.end()));
  }
  return out;
}

}  // namespace contra
