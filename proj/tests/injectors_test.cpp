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

#include <doctest.h>

#include <set>
#include <sstream>

#include "contra/error.hpp"
#include "test_util.hpp"

using namespace contra;
using testutil::lexicons;
using testutil::sentence;

namespace {

CorpusStats fixture_stats(std::vector<std::string> extra = {}) {
  std::vector<std::string> lines = {
      "das Timing ist sicher .",
      "das Timing ist unsicher .",
      "der Senator sieht das Büro des amerikanischen Kongresses .",
      "er hat keine Idee , sie hat eine Idee .",
      "mit dem Hund läuft er durch die Stadt .",
  };
  lines.insert(lines.end(), extra.begin(), extra.end());
  return testutil::stats_from_lines(lines);
}

SiteRng rng_for(const std::string& category, uint64_t seed = 1) {
  return SiteRng::for_site(seed, "t1", category, 0);
}

}  // namespace

TEST_SUITE_BEGIN("injectors");

TEST_CASE("np: gender flip on des produces der") {
  Sentence s = sentence("die Mitglieder des amerikanischen Kongresses");
  auto targets = find_np_targets(s, lexicons());
  REQUIRE(targets.size() == 1);
  CorpusStats stats = fixture_stats();
  SiteRng rng = rng_for("np_agreement");
  auto pair = inject_np_agreement(s, targets[0], stats, lexicons(), rng);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"die", "Mitglieder", "der", "amerikanischen",
                                 "Kongresses"});
  CHECK(pair->category == Category::kNpAgreement);
  CHECK(pair->distance == 2);
  CHECK(pair->frequency == stats.frequency("des"));
  validate_pair(*pair);
}

TEST_CASE("np: dem Hund becomes der Hund") {
  Sentence s = sentence("mit dem Hund");
  auto targets = find_np_targets(s, lexicons());
  REQUIRE(targets.size() == 1);
  CorpusStats stats = fixture_stats();
  SiteRng rng = rng_for("np_agreement");
  auto pair = inject_np_agreement(s, targets[0], stats, lexicons(), rng);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"mit", "der", "Hund"});
  CHECK(pair->distance == 1);
}

TEST_CASE("np: no targets means no pairs") {
  Sentence s = sentence("die Pläne sind gut");
  CHECK(find_np_targets(s, lexicons()).empty());
}

TEST_CASE("sv: number swap in subordinate clause") {
  Sentence s = sentence("dass der Plan verabschiedet wird");
  auto links = find_sv_links(s, lexicons());
  REQUIRE(links.size() == 1);
  CorpusStats stats = fixture_stats();
  auto pair = inject_sv_agreement(s, links[0], stats, lexicons());
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"dass", "der", "Plan", "verabschiedet",
                                 "werden"});
  CHECK(pair->distance == 2);
  CHECK_FALSE(pair->sie_ambiguous);
  validate_pair(*pair);
}

TEST_CASE("sv: fronted-object sentence still gets hatten") {
  Sentence s = sentence(
      "Die besten Gelegenheiten in Hälfte eins hatte Robert Lewandowski");
  auto links = find_sv_links(s, lexicons());
  REQUIRE(links.size() == 1);
  CorpusStats stats = fixture_stats();
  auto pair = inject_sv_agreement(s, links[0], stats, lexicons());
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive[6] == "hatten");
  CHECK_FALSE(pair->sie_ambiguous);
}

TEST_CASE("sv: sie kommt swaps to kommen with the ambiguity flag") {
  Sentence s = sentence("sie kommt");
  auto links = find_sv_links(s, lexicons());
  REQUIRE(links.size() == 1);
  CorpusStats stats = fixture_stats();
  auto pair = inject_sv_agreement(s, links[0], stats, lexicons());
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"sie", "kommen"});
  CHECK(pair->sie_ambiguous);
}

TEST_CASE("particle: picks an unseen particle, never a seen one") {
  Sentence s = sentence("er ruht sich aus");
  auto occs = find_particles(s, lexicons());
  REQUIRE(occs.size() == 1);

  // attest every particle with ruht except an
  std::vector<std::string> extra;
  for (const std::string& p : lexicons().particles) {
    if (p != "an") extra.push_back("er ruht sich " + p + " .");
  }
  CorpusStats stats = fixture_stats(extra);
  REQUIRE(stats.particle_count("ruht", "an") == 0);
  REQUIRE(stats.particle_count("ruht", "weg") == 1);

  SiteRng rng = rng_for("verb_particle");
  auto pair = inject_particle(s, occs[0], stats, lexicons(), rng);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"er", "ruht", "sich", "an"});
  CHECK(pair->frequency ==
        std::min(stats.frequency("ruht"), stats.frequency("aus")));
  validate_pair(*pair);
}

TEST_CASE("particle: all particles seen means skip") {
  Sentence s = sentence("er ruht sich aus");
  auto occs = find_particles(s, lexicons());
  std::vector<std::string> extra;
  for (const std::string& p : lexicons().particles) {
    extra.push_back("er ruht sich " + p + " .");
  }
  CorpusStats stats = fixture_stats(extra);
  SiteRng rng = rng_for("verb_particle");
  CHECK_FALSE(inject_particle(s, occs[0], stats, lexicons(), rng).has_value());
}

TEST_CASE("particle: forced choice when only weg is unseen") {
  Sentence s = sentence("er ruht sich aus");
  auto occs = find_particles(s, lexicons());
  std::vector<std::string> extra;
  for (const std::string& p : lexicons().particles) {
    if (p != "weg") extra.push_back("er ruht sich " + p + " .");
  }
  CorpusStats stats = fixture_stats(extra);
  SiteRng rng = rng_for("verb_particle");
  auto pair = inject_particle(s, occs[0], stats, lexicons(), rng);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"er", "ruht", "sich", "weg"});
}

TEST_CASE("polarity: un deletion yields the Table-style pair") {
  Sentence s = sentence("das Timing ist unsicher");
  CorpusStats stats = fixture_stats();
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kDelete,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"das", "Timing", "ist", "sicher"});
  CHECK(pair->subcategory == "un_deletion");
  CHECK(pair->frequency ==
        std::min(stats.frequency("unsicher"), stats.frequency("sicher")));
  validate_pair(*pair);
}

TEST_CASE("polarity: nicht deletion removes the token") {
  Sentence s = sentence("die nicht das gleiche Niveau hat");
  CorpusStats stats = fixture_stats();
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kDelete,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"die", "das", "gleiche", "Niveau", "hat"});
  CHECK(pair->subcategory == "nicht_deletion");
  CHECK_FALSE(pair->frequency.has_value());
  validate_pair(*pair);
}

TEST_CASE("polarity: ein/kein swap keeps inflection and case") {
  CorpusStats stats = fixture_stats();
  Sentence s = sentence("er hat eine Idee");
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kInsert,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"er", "hat", "keine", "Idee"});
  CHECK(pair->subcategory == "kein_insertion");

  Sentence t = sentence("Eine Idee hat er .");
  auto tsites = find_negation_sites(t, stats, lexicons());
  REQUIRE(tsites.size() == 1);
  auto tpair = inject_polarity(t, tsites[0], NegationDirection::kInsert,
                               lexicons(), stats);
  REQUIRE(tpair.has_value());
  CHECK(tpair->contrastive[0] == "Keine");
}

TEST_CASE("polarity: nicht insertion after verb and clitic cluster") {
  CorpusStats stats = fixture_stats();
  Sentence s = sentence("er ruht sich aus .");
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  REQUIRE(sites[0].direction_available == NegationDirection::kInsert);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kInsert,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"er", "ruht", "sich", "nicht", "aus", "."});
  CHECK(pair->subcategory == "nicht_insertion");
  CHECK_FALSE(pair->frequency.has_value());
}

TEST_CASE("polarity: nicht insertion before a clause-final verb") {
  CorpusStats stats = fixture_stats();
  Sentence s = sentence("dass der Plan verabschiedet wird .");
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kInsert,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive ==
        std::vector<std::string>{"dass", "der", "Plan", "verabschiedet",
                                 "nicht", "wird", "."});
}

TEST_CASE("polarity: second-position verb keeps post-verb placement") {
  CorpusStats stats = fixture_stats();
  Sentence s = sentence("sie kommt .");
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  auto pair = inject_polarity(s, sites[0], NegationDirection::kInsert,
                              lexicons(), stats);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive == std::vector<std::string>{"sie", "kommt", "nicht", "."});
}

TEST_CASE("polarity: direction mismatch is a usage error") {
  CorpusStats stats = fixture_stats();
  Sentence s = sentence("er kommt nicht .");
  auto sites = find_negation_sites(s, stats, lexicons());
  REQUIRE(sites.size() == 1);
  CHECK_THROWS_AS(inject_polarity(s, sites[0], NegationDirection::kInsert,
                                  lexicons(), stats),
                  UsageError);
}

TEST_CASE("transliteration: swap set for Ensigns") {
  Sentence s = sentence("Senator Ensigns Büro");
  CorpusStats stats = fixture_stats();
  auto names = find_unseen_names(s, stats);
  REQUIRE(names.size() == 1);

  // enumerate the admissible outputs over many draws
  std::set<std::string> outputs;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    SiteRng rng = SiteRng::for_site(seed, "t1", "transliteration", 0);
    auto pair = inject_transliteration(s, names[0], rng);
    REQUIRE(pair.has_value());
    CHECK(pair->frequency == 0);
    CHECK(pair->contrastive[1] != "Ensigns");
    CHECK(pair->contrastive[1][0] == 'E');  // first character never moves
    outputs.insert(pair->contrastive[1]);
  }
  CHECK(outputs.count("Enisgns") == 1);
  CHECK(outputs ==
        std::set<std::string>{"Esnigns", "Enisgns", "Ensgins", "Ensings",
                              "Ensigsn"});
}

TEST_CASE("transliteration: Anna admits only Anan") {
  Sentence s = sentence("Frau Anna kommt");
  CorpusStats stats = fixture_stats();
  auto names = find_unseen_names(s, stats);
  REQUIRE(names.size() == 1);  // Frau is sentence-initial
  REQUIRE(names[0].surface == "Anna");
  SiteRng rng = rng_for("transliteration");
  auto pair = inject_transliteration(s, names[0], rng);
  REQUIRE(pair.has_value());
  CHECK(pair->contrastive[1] == "Anan");
}

TEST_CASE("transliteration: all-equal interior admits no swap") {
  Sentence s = sentence("Herr Aaaa kommt");
  NameCandidate cand{1, "Aaaa", 0};
  SiteRng rng = rng_for("transliteration");
  CHECK_FALSE(inject_transliteration(s, cand, rng).has_value());
}

TEST_CASE("generate_all: disabled categories yield nothing") {
  CorpusStats stats = fixture_stats();
  InjectionConfig config;
  config.enabled_categories.clear();
  HeuristicAnnotator annotator;
  auto pairs = generate_all({sentence("er ruht sich aus .")}, stats, lexicons(),
                            config, annotator);
  CHECK(pairs.empty());
}

TEST_CASE("generate_all: deterministic and independent of jobs") {
  CorpusStats stats = fixture_stats();
  std::vector<Sentence> sentences;
  std::vector<std::string> lines = {
      "er ruht sich aus .",          "sie macht die Tür auf .",
      "das Timing ist unsicher .",   "er hat eine Idee .",
      "Senator Ensigns Büro liegt in Washington .",
      "die Rede des Präsidenten dauerte lange .",
  };
  for (size_t i = 0; i < lines.size(); ++i) {
    sentences.push_back(contra::make_sentence("s" + std::to_string(i), lines[i]));
  }
  InjectionConfig config;
  config.rng_seed = 42;
  HeuristicAnnotator annotator;

  auto a = generate_all(sentences, stats, lexicons(), config, annotator, 1);
  auto b = generate_all(sentences, stats, lexicons(), config, annotator, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  std::ostringstream bytes_a, bytes_b;
  write_pairs(a, bytes_a, {{"seed", "42"}});
  write_pairs(b, bytes_b, {{"seed", "42"}});
  CHECK(bytes_a.str() == bytes_b.str());
}

TEST_CASE("generate_all: per-site streams are independent of other sentences") {
  CorpusStats stats = fixture_stats();
  InjectionConfig config;
  config.rng_seed = 7;
  HeuristicAnnotator annotator;
  Sentence fixed = contra::make_sentence("sX", "Senator Ensigns Büro");
  Sentence other = contra::make_sentence("sY", "er ruht sich aus .");

  auto alone = generate_all({fixed}, stats, lexicons(), config, annotator);
  auto together = generate_all({other, fixed}, stats, lexicons(), config,
                               annotator);
  ContrastivePair fixed_alone, fixed_together;
  for (const auto& p : alone) {
    if (p.sentence_id == "sX" && p.category == Category::kTransliteration)
      fixed_alone = p;
  }
  for (const auto& p : together) {
    if (p.sentence_id == "sX" && p.category == Category::kTransliteration)
      fixed_together = p;
  }
  CHECK(fixed_alone == fixed_together);
}

TEST_CASE("generate_all: minimality, reversibility, gate soundness") {
  std::vector<std::string> extra;
  for (const std::string& p : lexicons().particles) {
    if (p != "an" && p != "weg") extra.push_back("er ruht sich " + p + " .");
  }
  CorpusStats stats = fixture_stats(extra);
  std::vector<Sentence> sentences;
  std::vector<std::string> lines = {
      "er ruht sich aus .",        "das Timing ist unsicher .",
      "er hat eine Idee .",        "Senator Ensigns Büro liegt hier .",
      "dass der Plan verabschiedet wird .",
      "sie hat keine Zeit .",      "die Lage ist sicher .",
  };
  for (size_t i = 0; i < lines.size(); ++i) {
    sentences.push_back(contra::make_sentence("s" + std::to_string(i), lines[i]));
  }
  InjectionConfig config;
  config.rng_seed = 3;
  HeuristicAnnotator annotator;
  auto pairs = generate_all(sentences, stats, lexicons(), config, annotator);
  REQUIRE(!pairs.empty());

  for (const ContrastivePair& p : pairs) {
    validate_pair(p);
    CHECK(p.reference != p.contrastive);
    CHECK(apply_edit(p.reference, p.edit) == p.contrastive);
    // token-level edit distance: 1 except nicht insertion which adds 1
    if (p.subcategory == "nicht_insertion") {
      CHECK(p.contrastive.size() == p.reference.size() + 1);
      CHECK(p.edit.length == 0);
    } else {
      CHECK(p.edit.length == 1);
      CHECK(p.edit.replacement.size() <= 1);
    }
    if (p.category == Category::kVerbParticle) {
      const std::string& verb = p.reference[1];  // all fixtures: verb at 1
      const std::string& np = p.edit.replacement.at(0);
      CHECK(stats.particle_count(verb, np) == 0);
    }
    if (p.category == Category::kTransliteration) {
      CHECK(p.frequency == 0);
      CHECK(stats.frequency(p.edit.replacement.at(0)) == 0);
    }
    if (p.subcategory.rfind("un_", 0) == 0) {
      CHECK(stats.frequency(p.edit.replacement.at(0)) >= 1);
    }
  }
}

TEST_CASE("generate_all: max pairs per sentence and category") {
  CorpusStats stats = fixture_stats();
  InjectionConfig config;
  config.max_pairs_per_sentence_per_category = 1;
  HeuristicAnnotator annotator;
  auto pairs =
      generate_all({contra::make_sentence("s0", "er hat keine Zeit und keine Lust .")},
                   stats, lexicons(), config, annotator);
  int polarity = 0;
  for (const auto& p : pairs) {
    if (p.category == Category::kPolarity) ++polarity;
  }
  CHECK(polarity == 1);
}

TEST_CASE("generate_all: mismatched normalization tag is an error") {
  CorpusStats stats = fixture_stats();
  stats.normalization_tag = "legacy/0";
  InjectionConfig config;
  HeuristicAnnotator annotator;
  CHECK_THROWS_AS(generate_all({sentence("er kommt .")}, stats, lexicons(),
                               config, annotator),
                  InvalidError);
}

TEST_SUITE_END();
