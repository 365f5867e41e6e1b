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

// Command-line front end. Everything goes through the public C API in
// contra.h; this file deliberately uses no internal headers.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contra.h"

namespace {

int fail_api(contra_status status) {
  std::fprintf(stderr, "error: %s\n", contra_last_error());
  return status == CONTRA_ERR_USAGE ? 2 : 1;
}

struct LexiconsHandle {
  contra_lexicons* ptr = nullptr;
  ~LexiconsHandle() { contra_lexicons_free(ptr); }
};
struct StatsHandle {
  contra_stats* ptr = nullptr;
  ~StatsHandle() { contra_stats_free(ptr); }
};
struct LmHandle {
  contra_lm* ptr = nullptr;
  ~LmHandle() { contra_lm_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contra: contrastive translation pair toolkit"};
  app.set_config("--config", "", "Key-value configuration file; command-line "
                                 "flags override it");
  app.require_subcommand(1);

  // ---- stats -----------------------------------------------------------
  auto* cmd_stats = app.add_subcommand(
      "stats", "Build training-corpus statistics (stats.tsv)");
  std::string stats_corpus, stats_lexicons, stats_out;
  int stats_jobs = 1;
  cmd_stats->add_option("--corpus", stats_corpus, "Training corpus, one sentence per line")
      ->required();
  cmd_stats->add_option("--lexicons", stats_lexicons, "Lexicon directory")->required();
  cmd_stats->add_option("--out", stats_out, "Output stats.tsv")->required();
  cmd_stats->add_option("--jobs", stats_jobs, "Worker threads");

  // ---- bpe-learn -------------------------------------------------------
  auto* cmd_bpe = app.add_subcommand(
      "bpe-learn", "Learn a joint BPE model from one or more corpora");
  std::vector<std::string> bpe_corpora;
  std::string bpe_out;
  uint32_t bpe_merges = 0;
  cmd_bpe->add_option("--corpus", bpe_corpora, "Corpus file (repeatable; pooled)")
      ->required();
  cmd_bpe->add_option("--merges", bpe_merges, "Number of merges to learn")->required();
  cmd_bpe->add_option("--out", bpe_out, "Output model file")->required();

  // ---- generate ---------------------------------------------------------
  auto* cmd_generate = app.add_subcommand(
      "generate", "Create contrastive pairs from reference translations");
  std::string gen_reference, gen_source, gen_stats, gen_lexicons, gen_out;
  std::string gen_categories;
  uint64_t gen_seed = 1;
  uint64_t gen_max = 0;
  int gen_jobs = 1;
  cmd_generate->add_option("--reference", gen_reference,
                           "Reference translations, one sentence per line")
      ->required();
  cmd_generate->add_option("--source", gen_source,
                           "Aligned source sentences (optional)");
  cmd_generate->add_option("--stats", gen_stats, "stats.tsv from 'stats'")->required();
  cmd_generate->add_option("--lexicons", gen_lexicons, "Lexicon directory")->required();
  cmd_generate->add_option("--categories", gen_categories,
                           "Comma-separated category subset (default: all)");
  cmd_generate->add_option("--seed", gen_seed, "Random seed (default 1)");
  cmd_generate->add_option("--max-per-sentence-category", gen_max,
                           "Cap pairs per sentence and category (0 = none)");
  cmd_generate->add_option("--jobs", gen_jobs, "Worker threads");
  cmd_generate->add_option("--out", gen_out, "Output pairs.jsonl")->required();

  // ---- lm-train ----------------------------------------------------------
  auto* cmd_lm = app.add_subcommand(
      "lm-train", "Train the baseline n-gram scorer");
  std::string lm_corpus, lm_scheme = "word", lm_bpe, lm_out;
  int lm_order = 3;
  cmd_lm->add_option("--corpus", lm_corpus, "Training corpus")->required();
  cmd_lm->add_option("--order", lm_order, "N-gram order (default 3)");
  cmd_lm->add_option("--scheme", lm_scheme, "word|bpe|char (default word)");
  cmd_lm->add_option("--bpe-model", lm_bpe, "BPE model (required for --scheme bpe)");
  cmd_lm->add_option("--out", lm_out, "Output model file")->required();

  // ---- score --------------------------------------------------------------
  auto* cmd_score = app.add_subcommand(
      "score", "Score pair sides with the baseline model or adopt external "
               "scores");
  std::string score_pairs, score_lm, score_external, score_out;
  bool score_emit_input = false;
  int score_jobs = 1;
  cmd_score->add_option("--pairs", score_pairs, "pairs.jsonl")->required();
  cmd_score->add_option("--lm", score_lm, "Baseline model file");
  cmd_score->add_option("--external", score_external,
                        "Score file produced by an external scorer");
  cmd_score->add_flag("--emit-input", score_emit_input,
                      "Write the TSV handed to an external scorer instead");
  cmd_score->add_option("--jobs", score_jobs, "Worker threads");
  cmd_score->add_option("--out", score_out, "Output file")->required();

  // ---- evaluate -------------------------------------------------------------
  auto* cmd_eval = app.add_subcommand(
      "evaluate", "Judge pairs under one or more score files and render the "
                  "report");
  std::string eval_pairs, eval_report;
  std::vector<std::string> eval_scores;
  cmd_eval->add_option("--pairs", eval_pairs, "pairs.jsonl")->required();
  cmd_eval
      ->add_option("--scores", eval_scores,
                   "Score file, optionally label=path (repeatable)")
      ->required();
  cmd_eval->add_option("--report-dir", eval_report, "Report directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_stats->parsed()) {
    LexiconsHandle lex;
    if (auto rc = contra_lexicons_load(stats_lexicons.c_str(), &lex.ptr)) {
      return fail_api(rc);
    }
    if (auto rc = contra_stats_build(stats_corpus.c_str(), lex.ptr, stats_jobs,
                                     stats_out.c_str())) {
      return fail_api(rc);
    }
    std::fprintf(stderr, "contra: stats written to %s\n", stats_out.c_str());
    return 0;
  }

  if (cmd_bpe->parsed()) {
    std::vector<const char*> paths;
    for (const std::string& p : bpe_corpora) paths.push_back(p.c_str());
    if (auto rc = contra_bpe_learn(paths.data(), paths.size(), bpe_merges,
                                   bpe_out.c_str())) {
      return fail_api(rc);
    }
    std::fprintf(stderr, "contra: BPE model written to %s\n", bpe_out.c_str());
    return 0;
  }

  if (cmd_generate->parsed()) {
    LexiconsHandle lex;
    if (auto rc = contra_lexicons_load(gen_lexicons.c_str(), &lex.ptr)) {
      return fail_api(rc);
    }
    StatsHandle stats;
    if (auto rc = contra_stats_open(gen_stats.c_str(), &stats.ptr)) {
      return fail_api(rc);
    }
    uint64_t count = 0;
    if (auto rc = contra_generate(
            gen_reference.c_str(), gen_source.empty() ? nullptr : gen_source.c_str(),
            stats.ptr, lex.ptr,
            gen_categories.empty() ? nullptr : gen_categories.c_str(), gen_seed,
            gen_max, gen_jobs, gen_out.c_str(), &count)) {
      return fail_api(rc);
    }
    std::fprintf(stderr, "contra: seed=%llu pairs=%llu -> %s\n",
                 static_cast<unsigned long long>(gen_seed),
                 static_cast<unsigned long long>(count), gen_out.c_str());
    return 0;
  }

  if (cmd_lm->parsed()) {
    if (auto rc = contra_lm_train(lm_corpus.c_str(), lm_order, lm_scheme.c_str(),
                                  lm_bpe.empty() ? nullptr : lm_bpe.c_str(),
                                  lm_out.c_str())) {
      return fail_api(rc);
    }
    std::fprintf(stderr, "contra: model written to %s\n", lm_out.c_str());
    return 0;
  }

  if (cmd_score->parsed()) {
    const int modes = (!score_lm.empty() ? 1 : 0) +
                      (!score_external.empty() ? 1 : 0) +
                      (score_emit_input ? 1 : 0);
    if (modes != 1) {
      std::fprintf(stderr,
                   "error: usage: score needs exactly one of --lm, --external, "
                   "--emit-input\n");
      return 2;
    }
    if (score_emit_input) {
      if (auto rc = contra_export_scoring_input(score_pairs.c_str(),
                                                score_out.c_str())) {
        return fail_api(rc);
      }
    } else if (!score_external.empty()) {
      if (auto rc = contra_score_external(score_pairs.c_str(),
                                          score_external.c_str(),
                                          score_out.c_str())) {
        return fail_api(rc);
      }
    } else {
      LmHandle lm;
      if (auto rc = contra_lm_open(score_lm.c_str(), &lm.ptr)) {
        return fail_api(rc);
      }
      if (auto rc = contra_score_pairs(score_pairs.c_str(), lm.ptr, score_jobs,
                                       score_out.c_str())) {
        return fail_api(rc);
      }
    }
    std::fprintf(stderr, "contra: wrote %s\n", score_out.c_str());
    return 0;
  }

  if (cmd_eval->parsed()) {
    std::vector<std::string> labels_s, paths_s;
    for (const std::string& spec : eval_scores) {
      auto eq = spec.find('=');
      if (eq != std::string::npos && eq > 0) {
        labels_s.push_back(spec.substr(0, eq));
        paths_s.push_back(spec.substr(eq + 1));
      } else {
        labels_s.push_back("");
        paths_s.push_back(spec);
      }
    }
    std::vector<const char*> labels, paths;
    for (size_t i = 0; i < paths_s.size(); ++i) {
      labels.push_back(labels_s[i].empty() ? nullptr : labels_s[i].c_str());
      paths.push_back(paths_s[i].c_str());
    }
    if (auto rc = contra_evaluate(eval_pairs.c_str(), paths.data(),
                                  labels.data(), paths.size(),
                                  eval_report.c_str())) {
      return fail_api(rc);
    }
    std::fprintf(stderr, "contra: report written to %s\n", eval_report.c_str());
    return 0;
  }

  return 0;
}
