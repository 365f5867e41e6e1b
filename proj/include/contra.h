/* Copyright 2026 The contra Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the contra toolkit: synthesis of contrastive translation pairs
 * from reference translations via rule-based German error injectors, and
 * evaluation of sequence scorers on them.
 *
 * All functions return CONTRA_OK (0) on success or a nonzero status code;
 * contra_last_error() returns a thread-local message for the last failure.
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function. Handles are immutable after
 * creation and may be shared across threads.
 */

#ifndef CONTRA_H_
#define CONTRA_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum contra_status {
  CONTRA_OK = 0,
  CONTRA_ERR_IO = 1,
  CONTRA_ERR_PARSE = 2,
  CONTRA_ERR_INVALID = 3,
  CONTRA_ERR_USAGE = 4,
  CONTRA_ERR_INTERNAL = 5
} contra_status;

typedef struct contra_lexicons contra_lexicons;
typedef struct contra_stats contra_stats;
typedef struct contra_lm contra_lm;

const char* contra_version(void);

/* Thread-local message for the last failed call; empty string if none. */
const char* contra_last_error(void);

/* ---- lexicons ---------------------------------------------------------- */

contra_status contra_lexicons_load(const char* dir, contra_lexicons** out);
void contra_lexicons_free(contra_lexicons* lexicons);

/* ---- corpus statistics ------------------------------------------------- */

/* Builds stats.tsv from a one-sentence-per-line UTF-8 corpus. */
contra_status contra_stats_build(const char* corpus_path,
                                 const contra_lexicons* lexicons, int jobs,
                                 const char* out_path);

contra_status contra_stats_open(const char* path, contra_stats** out);
void contra_stats_free(contra_stats* stats);

/* Exact-match surface frequency; 0 for unseen forms or NULL form. */
uint64_t contra_stats_frequency(const contra_stats* stats, const char* form);
uint64_t contra_stats_particle_count(const contra_stats* stats,
                                     const char* verb, const char* particle);

/* ---- subword segmentation --------------------------------------------- */

/* Learns a joint BPE model over the pooled corpora and writes it out. */
contra_status contra_bpe_learn(const char* const* corpus_paths, size_t n_paths,
                               uint32_t merge_count, const char* out_path);

/* ---- pair generation --------------------------------------------------- */

/* Runs the enabled injectors over every sentence of the reference corpus.
 * categories_csv: comma-separated subset of
 *   np_agreement,subject_verb,verb_particle,polarity,transliteration
 * or NULL for all. source_path may be NULL; when given, it must be aligned
 * line by line with the reference corpus. Writes pairs.jsonl; *out_count
 * (optional) receives the number of pairs. */
contra_status contra_generate(const char* reference_path,
                              const char* source_path,
                              const contra_stats* stats,
                              const contra_lexicons* lexicons,
                              const char* categories_csv, uint64_t seed,
                              uint64_t max_per_sentence_category, int jobs,
                              const char* out_pairs_path, uint64_t* out_count);

/* ---- scoring ------------------------------------------------------------ */

/* Trains the baseline n-gram scorer. scheme: "word", "char" or "bpe"
 * (bpe requires bpe_model_path). */
contra_status contra_lm_train(const char* corpus_path, int order,
                              const char* scheme, const char* bpe_model_path,
                              const char* out_model_path);

contra_status contra_lm_open(const char* path, contra_lm** out);
void contra_lm_free(contra_lm* lm);

/* Scores both sides of every pair with the baseline model. */
contra_status contra_score_pairs(const char* pairs_path, const contra_lm* lm,
                                 int jobs, const char* out_scores_path);

/* Validates an externally produced score file against the pairs and
 * rewrites it in canonical scores.tsv form. */
contra_status contra_score_external(const char* pairs_path,
                                    const char* external_scores_path,
                                    const char* out_scores_path);

/* Writes the TSV handed to an external scorer:
 * pair_id <TAB> side <TAB> source_text <TAB> target_text. */
contra_status contra_export_scoring_input(const char* pairs_path,
                                          const char* out_path);

/* ---- evaluation --------------------------------------------------------- */

/* Judges every pair under each score file and renders the report directory
 * (summary.md, by_category.tsv, negation.tsv, plot files). labels may be
 * NULL, in which case score file stems are used. */
contra_status contra_evaluate(const char* pairs_path,
                              const char* const* score_paths,
                              const char* const* labels, size_t n_systems,
                              const char* report_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CONTRA_H_ */
