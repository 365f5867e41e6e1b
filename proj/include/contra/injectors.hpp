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

#ifndef CONTRA_INJECTORS_HPP_
#define CONTRA_INJECTORS_HPP_

#include <optional>
#include <set>
#include <vector>

#include "contra/annotator.hpp"
#include "contra/rng.hpp"
#include "contra/testset.hpp"

namespace contra {

struct InjectionConfig {
  std::set<Category> enabled_categories{kAllCategories,
                                        std::end(kAllCategories)};
  uint64_t rng_seed = 1;
  uint64_t max_pairs_per_sentence_per_category = 0;  // 0 = unbounded
};

// Each injector returns nullopt when the site admits no valid edit (the
// "skip" outcome); it never falls back to a different site.

std::optional<ContrastivePair> inject_np_agreement(
    const Sentence& sentence, const DeterminerAnalysis& target,
    const CorpusStats& stats, const Lexicons& lexicons, SiteRng& rng);

std::optional<ContrastivePair> inject_sv_agreement(const Sentence& sentence,
                                                   const SubjectVerbLink& link,
                                                   const CorpusStats& stats,
                                                   const Lexicons& lexicons);

std::optional<ContrastivePair> inject_particle(const Sentence& sentence,
                                               const ParticleOccurrence& occ,
                                               const CorpusStats& stats,
                                               const Lexicons& lexicons,
                                               SiteRng& rng);

std::optional<ContrastivePair> inject_polarity(const Sentence& sentence,
                                               const NegationSite& site,
                                               NegationDirection direction,
                                               const Lexicons& lexicons,
                                               const CorpusStats& stats);

std::optional<ContrastivePair> inject_transliteration(const Sentence& sentence,
                                                      const NameCandidate& cand,
                                                      SiteRng& rng);

// Runs every enabled injector over every annotated site of every sentence.
// Output is ordered by sentence, then category, then site index, and is
// byte-identical for a fixed seed regardless of `jobs`.
std::vector<ContrastivePair> generate_all(const std::vector<Sentence>& sentences,
                                          const CorpusStats& stats,
                                          const Lexicons& lexicons,
                                          const InjectionConfig& config,
                                          const Annotator& annotator,
                                          int jobs = 1);

std::vector<ContrastivePair> generate_for_sentence(
    const AnnotatedSentence& annotated, const CorpusStats& stats,
    const Lexicons& lexicons, const InjectionConfig& config);

}  // namespace contra

#endif  // CONTRA_INJECTORS_HPP_
