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

#include "contra.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "contra/error.hpp"
#include "contra/eval.hpp"
#include "contra/injectors.hpp"
#include "contra/lexicons.hpp"
#include "contra/scoring.hpp"
#include "contra/segmentation.hpp"
#include "contra/stats.hpp"
#include "contra/testset.hpp"
#include "contra/version.hpp"

struct contra_lexicons {
  contra::Lexicons impl;
};
struct contra_stats {
  contra::CorpusStats impl;
};
struct contra_lm {
  contra::NgramModel impl;
};

namespace {

thread_local std::string g_last_error;

contra_status to_status(const contra::Error& e) {
  switch (e.kind()) {
    case contra::ErrorKind::kIo: return CONTRA_ERR_IO;
    case contra::ErrorKind::kParse: return CONTRA_ERR_PARSE;
    case contra::ErrorKind::kInvalid: return CONTRA_ERR_INVALID;
    case contra::ErrorKind::kUsage: return CONTRA_ERR_USAGE;
  }
  return CONTRA_ERR_INTERNAL;
}

template <typename Fn>
contra_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CONTRA_OK;
  } catch (const contra::Error& e) {
    g_last_error = std::string(e.kind_name()) + ": " + e.what();
    return to_status(e);
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return CONTRA_ERR_INTERNAL;
  }
}

contra_status require(bool ok, const char* what) {
  if (ok) return CONTRA_OK;
  g_last_error = std::string("usage: ") + what;
  return CONTRA_ERR_USAGE;
}

std::vector<std::string> read_all_lines(const std::string& path) {
  std::ifstream in = contra::open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string sentence_id_for_line(size_t lineno_1based) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "s%06zu", lineno_1based);
  return buf;
}

}  // namespace

extern "C" {

const char* contra_version(void) { return contra::kToolVersion; }

const char* contra_last_error(void) { return g_last_error.c_str(); }

contra_status contra_lexicons_load(const char* dir, contra_lexicons** out) {
  if (auto rc = require(dir && out, "lexicons_load needs dir and out")) return rc;
  return guarded([&] {
    auto* handle = new contra_lexicons{contra::Lexicons::load(dir)};
    *out = handle;
  });
}

void contra_lexicons_free(contra_lexicons* lexicons) { delete lexicons; }

contra_status contra_stats_build(const char* corpus_path,
                                 const contra_lexicons* lexicons, int jobs,
                                 const char* out_path) {
  if (auto rc = require(corpus_path && lexicons && out_path,
                        "stats_build needs corpus, lexicons and output")) {
    return rc;
  }
  return guarded([&] {
    contra::CorpusStats stats =
        contra::build_stats_file(corpus_path, lexicons->impl, jobs);
    contra::KvList prov;
    prov.emplace_back("config",
                      contra::config_hash({{"normalization",
                                            stats.normalization_tag}}));
    contra::write_stats_file(stats, out_path, prov);
  });
}

contra_status contra_stats_open(const char* path, contra_stats** out) {
  if (auto rc = require(path && out, "stats_open needs path and out")) return rc;
  return guarded([&] {
    *out = new contra_stats{contra::read_stats_file(path)};
  });
}

void contra_stats_free(contra_stats* stats) { delete stats; }

uint64_t contra_stats_frequency(const contra_stats* stats, const char* form) {
  if (!stats || !form) return 0;
  return stats->impl.frequency(form);
}

uint64_t contra_stats_particle_count(const contra_stats* stats,
                                     const char* verb, const char* particle) {
  if (!stats || !verb || !particle) return 0;
  return stats->impl.particle_count(verb, particle);
}

contra_status contra_bpe_learn(const char* const* corpus_paths, size_t n_paths,
                               uint32_t merge_count, const char* out_path) {
  if (auto rc = require(corpus_paths && n_paths > 0 && out_path,
                        "bpe_learn needs corpora and output")) {
    return rc;
  }
  return guarded([&] {
    std::vector<std::string> paths(corpus_paths, corpus_paths + n_paths);
    contra::BpeModel model = contra::bpe_learn_corpora(paths, merge_count);
    contra::KvList prov;
    prov.emplace_back("config", contra::config_hash(
                                    {{"merge_count",
                                      std::to_string(merge_count)}}));
    contra::write_bpe_model_file(model, out_path, prov);
  });
}

contra_status contra_generate(const char* reference_path,
                              const char* source_path,
                              const contra_stats* stats,
                              const contra_lexicons* lexicons,
                              const char* categories_csv, uint64_t seed,
                              uint64_t max_per_sentence_category, int jobs,
                              const char* out_pairs_path, uint64_t* out_count) {
  if (auto rc = require(reference_path && stats && lexicons && out_pairs_path,
                        "generate needs reference, stats, lexicons, output")) {
    return rc;
  }
  return guarded([&] {
    contra::InjectionConfig config;
    config.rng_seed = seed;
    config.max_pairs_per_sentence_per_category = max_per_sentence_category;
    std::string categories_str = "all";
    if (categories_csv && *categories_csv) {
      categories_str = categories_csv;
      config.enabled_categories.clear();
      for (const std::string& name : contra::split(categories_csv, ',')) {
        if (!name.empty()) {
          config.enabled_categories.insert(contra::parse_category(name));
        }
      }
    }

    std::vector<std::string> ref_lines = read_all_lines(reference_path);
    std::vector<std::string> src_lines;
    if (source_path && *source_path) {
      src_lines = read_all_lines(source_path);
      if (src_lines.size() != ref_lines.size()) {
        throw contra::InvalidError(
            "source corpus has " + std::to_string(src_lines.size()) +
            " lines but reference has " + std::to_string(ref_lines.size()));
      }
    }

    std::vector<contra::Sentence> sentences;
    sentences.reserve(ref_lines.size());
    for (size_t i = 0; i < ref_lines.size(); ++i) {
      contra::Sentence s;
      s.id = sentence_id_for_line(i + 1);
      if (!src_lines.empty()) s.source_text = src_lines[i];
      try {
        s.tokens = contra::tokenize(ref_lines[i]);
      } catch (const contra::ParseError&) {
        continue;  // undecodable reference line contributes no pairs
      }
      sentences.push_back(std::move(s));
    }

    contra::HeuristicAnnotator annotator;
    std::vector<contra::ContrastivePair> pairs = contra::generate_all(
        sentences, stats->impl, lexicons->impl, config, annotator, jobs);

    contra::KvList semantic;
    semantic.emplace_back("seed", std::to_string(seed));
    semantic.emplace_back("categories", categories_str);
    semantic.emplace_back("max_per_sentence_category",
                          std::to_string(max_per_sentence_category));
    semantic.emplace_back("normalization", stats->impl.normalization_tag);
    contra::KvList prov;
    prov.emplace_back("config", contra::config_hash(semantic));
    prov.insert(prov.end(), semantic.begin(), semantic.end());

    uint64_t written = contra::write_pairs_file(pairs, out_pairs_path, prov);
    if (out_count) *out_count = written;
  });
}

contra_status contra_lm_train(const char* corpus_path, int order,
                              const char* scheme, const char* bpe_model_path,
                              const char* out_model_path) {
  if (auto rc = require(corpus_path && scheme && out_model_path,
                        "lm_train needs corpus, scheme and output")) {
    return rc;
  }
  return guarded([&] {
    contra::Scheme s = contra::parse_scheme(scheme);
    std::optional<contra::BpeModel> bpe;
    if (s == contra::Scheme::kBpe) {
      if (!bpe_model_path || !*bpe_model_path) {
        throw contra::UsageError("bpe scheme requires a BPE model file");
      }
      bpe = contra::read_bpe_model_file(bpe_model_path);
    }
    contra::NgramModel model =
        contra::lm_train_file(corpus_path, order, s, std::move(bpe));
    contra::KvList prov;
    prov.emplace_back("config",
                      contra::config_hash({{"order", std::to_string(order)},
                                           {"scheme", scheme}}));
    model.save_file(out_model_path, prov);
  });
}

contra_status contra_lm_open(const char* path, contra_lm** out) {
  if (auto rc = require(path && out, "lm_open needs path and out")) return rc;
  return guarded([&] {
    *out = new contra_lm{contra::NgramModel::load_file(path)};
  });
}

void contra_lm_free(contra_lm* lm) { delete lm; }

contra_status contra_score_pairs(const char* pairs_path, const contra_lm* lm,
                                 int jobs, const char* out_scores_path) {
  if (auto rc = require(pairs_path && lm && out_scores_path,
                        "score_pairs needs pairs, model and output")) {
    return rc;
  }
  return guarded([&] {
    std::vector<contra::ContrastivePair> pairs =
        contra::read_pairs_file(pairs_path);
    std::vector<contra::ScoreRecord> records =
        contra::score_pairs(lm->impl, pairs, jobs);
    contra::KvList prov;
    prov.emplace_back("config", contra::config_hash(
                                    {{"order", std::to_string(lm->impl.order())},
                                     {"scheme", to_string(lm->impl.scheme())}}));
    prov.emplace_back("scorer", "ngram-baseline");
    prov.emplace_back("scheme", to_string(lm->impl.scheme()));
    contra::write_scores_file(records, out_scores_path, prov);
  });
}

contra_status contra_score_external(const char* pairs_path,
                                    const char* external_scores_path,
                                    const char* out_scores_path) {
  if (auto rc = require(pairs_path && external_scores_path && out_scores_path,
                        "score_external needs pairs, scores and output")) {
    return rc;
  }
  return guarded([&] {
    std::vector<contra::ContrastivePair> pairs =
        contra::read_pairs_file(pairs_path);
    contra::ScoreMap map =
        contra::read_external_scores(pairs, external_scores_path);
    std::vector<contra::ScoreRecord> records;
    records.reserve(map.size());
    for (const contra::ContrastivePair& p : pairs) {
      records.push_back(map.at({p.pair_id, contra::kSideReference}));
      records.push_back(map.at({p.pair_id, contra::kSideContrastive}));
    }
    contra::KvList prov;
    prov.emplace_back("config", contra::config_hash({{"scorer", "external"}}));
    prov.emplace_back("scorer", "external");
    contra::write_scores_file(records, out_scores_path, prov);
  });
}

contra_status contra_export_scoring_input(const char* pairs_path,
                                          const char* out_path) {
  if (auto rc = require(pairs_path && out_path,
                        "export_scoring_input needs pairs and output")) {
    return rc;
  }
  return guarded([&] {
    std::vector<contra::ContrastivePair> pairs =
        contra::read_pairs_file(pairs_path);
    contra::KvList prov;
    prov.emplace_back("config", contra::config_hash({}));
    contra::export_scoring_input_file(pairs, out_path, prov);
  });
}

contra_status contra_evaluate(const char* pairs_path,
                              const char* const* score_paths,
                              const char* const* labels, size_t n_systems,
                              const char* report_dir) {
  if (auto rc = require(pairs_path && score_paths && n_systems > 0 && report_dir,
                        "evaluate needs pairs, score files and report dir")) {
    return rc;
  }
  return guarded([&] {
    std::vector<contra::ContrastivePair> pairs =
        contra::read_pairs_file(pairs_path);

    std::vector<std::pair<std::string, std::vector<contra::Outcome>>> systems;
    for (size_t i = 0; i < n_systems; ++i) {
      std::string label = labels && labels[i] && *labels[i]
                              ? labels[i]
                              : std::filesystem::path(score_paths[i])
                                    .stem()
                                    .string();
      contra::ScoreMap scores =
          contra::read_external_scores(pairs, score_paths[i]);
      systems.emplace_back(std::move(label), contra::judge(pairs, scores));
    }

    contra::KvList prov;
    prov.emplace_back("config",
                      contra::config_hash({{"systems",
                                            std::to_string(n_systems)}}));
    contra::render_report(systems, report_dir, prov);
  });
}

}  // extern "C"
