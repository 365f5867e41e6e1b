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

#include "contra/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

#include "contra/error.hpp"

namespace contra {

NgramModel::NgramModel(int order, Scheme scheme, std::optional<BpeModel> bpe)
    : order_(order), scheme_(scheme), bpe_(std::move(bpe)) {
  if (order_ < 1) throw UsageError("n-gram order must be >= 1");
  if (scheme_ == Scheme::kBpe && !bpe_) {
    throw UsageError("bpe scheme requires a BPE model");
  }
  levels_.resize(order_);
}

std::vector<std::string> NgramModel::segment(
    const std::vector<Token>& tokens) const {
  SymbolSequence seq;
  switch (scheme_) {
    case Scheme::kWord: seq = word_segment(tokens); break;
    case Scheme::kChar: seq = char_segment(tokens); break;
    case Scheme::kBpe: seq = bpe_->apply(tokens); break;
  }
  std::vector<std::string> rendered;
  rendered.reserve(seq.symbols.size());
  for (const Symbol& s : seq.symbols) rendered.push_back(s.render());
  return rendered;
}

void NgramModel::count_sentence(const std::vector<std::string>& symbols) {
  std::deque<std::string> history(order_ - 1, kBos);
  for (const std::string& sym : symbols) {
    for (int k = 0; k < order_; ++k) {
      std::vector<std::string> ctx(history.end() - k, history.end());
      Context& c = levels_[k][std::move(ctx)];
      ++c.next[sym];
      ++c.total;
    }
    if (order_ > 1) {
      history.pop_front();
      history.push_back(sym);
    }
  }
}

void NgramModel::train_line(const std::string& line) {
  std::vector<Token> tokens;
  try {
    tokens = tokenize(line);
  } catch (const ParseError&) {
    ++rejected_;
    return;
  }
  std::vector<std::string> symbols = segment(tokens);
  symbols.push_back(kEos);
  count_sentence(symbols);
}

void NgramModel::train(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) train_line(line);
  if (levels_[0].empty()) throw InvalidError("empty training corpus");
}

double NgramModel::prob(const std::vector<std::string>& context,
                        const std::string& symbol) const {
  if (levels_.empty() || levels_[0].empty()) {
    throw InvalidError("model is untrained");
  }
  int k = std::min<int>(order_ - 1, static_cast<int>(context.size()));
  // Work down from the longest context; unseen histories back off directly.
  std::vector<const Context*> chain(k + 1, nullptr);
  for (int level = k; level >= 0; --level) {
    std::vector<std::string> ctx(context.end() - level, context.end());
    auto it = levels_[level].find(ctx);
    chain[level] = it == levels_[level].end() ? nullptr : &it->second;
  }

  const Context& uni = *chain[0];
  const double v = static_cast<double>(uni.next.size());
  double p;
  {
    auto it = uni.next.find(symbol);
    const double c = it == uni.next.end() ? 0.0 : static_cast<double>(it->second);
    const double total = static_cast<double>(uni.total);
    // The reserved-mass share is uniform over the inventory plus one
    // unknown slot.
    p = std::max(c - kDiscount, 0.0) / total +
        (kDiscount * v / total) * (1.0 / (v + 1.0));
  }
  for (int level = 1; level <= k; ++level) {
    const Context* ctx = chain[level];
    if (ctx == nullptr) continue;  // unseen history: keep lower-order p
    auto it = ctx->next.find(symbol);
    const double c = it == ctx->next.end() ? 0.0 : static_cast<double>(it->second);
    const double total = static_cast<double>(ctx->total);
    const double distinct = static_cast<double>(ctx->next.size());
    p = std::max(c - kDiscount, 0.0) / total +
        (kDiscount * distinct / total) * p;
  }
  return p;
}

ScoreRecord NgramModel::score_tokens(const std::vector<Token>& tokens) const {
  std::vector<std::string> symbols = segment(tokens);
  symbols.push_back(kEos);

  std::vector<std::string> history(order_ - 1, kBos);
  double total = 0;
  for (const std::string& sym : symbols) {
    total += std::log(prob(history, sym));
    if (order_ > 1) {
      history.erase(history.begin());
      history.push_back(sym);
    }
  }

  ScoreRecord r;
  r.total_logprob = total;
  r.symbol_count = symbols.size();
  r.normalized = total / static_cast<double>(symbols.size());
  return r;
}

std::vector<std::string> NgramModel::inventory() const {
  std::vector<std::string> out;
  if (levels_.empty() || levels_[0].empty()) return out;
  const Context& uni = levels_[0].begin()->second;
  out.reserve(uni.next.size());
  for (const auto& [sym, n] : uni.next) out.push_back(sym);
  return out;
}

void NgramModel::save(std::ostream& out, const KvList& provenance) const {
  KvList kvs;
  kvs.emplace_back("order", std::to_string(order_));
  kvs.emplace_back("scheme", to_string(scheme_));
  kvs.emplace_back("discount", fmt_double(kDiscount));
  kvs.emplace_back("rejected_lines", std::to_string(rejected_));
  kvs.insert(kvs.end(), provenance.begin(), provenance.end());
  out << header_line("lm/1", kvs) << '\n';
  if (bpe_) {
    for (const auto& [l, r] : bpe_->merges) {
      out << "BPE\t" << l.render() << '\t' << r.render() << '\n';
    }
  }
  for (int k = 0; k < order_; ++k) {
    for (const auto& [ctx, entry] : levels_[k]) {
      for (const auto& [sym, count] : entry.next) {
        out << "NG\t" << k;
        for (const std::string& c : ctx) out << '\t' << c;
        out << '\t' << sym << '\t' << count << '\n';
      }
    }
  }
}

void NgramModel::save_file(const std::string& path,
                           const KvList& provenance) const {
  std::ofstream out = open_output(path);
  save(out, provenance);
  if (!out) throw IoError("failed writing model to '" + path + "'");
}

NgramModel NgramModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty model file");
  auto header = parse_header_line(line, "lm/1");

  const int order = std::stoi(header.at("order"));
  const Scheme scheme = parse_scheme(header.at("scheme"));

  std::vector<std::pair<Symbol, Symbol>> merges;
  std::vector<std::vector<std::string>> ngram_lines;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f[0] == "BPE" && f.size() == 3) {
      try {
        merges.push_back({parse_rendered_symbol(f[1]), parse_rendered_symbol(f[2])});
      } catch (const ParseError& e) {
        throw ParseError("model line " + std::to_string(lineno) + ": " +
                         e.what());
      }
    } else if (f[0] == "NG" && f.size() >= 4) {
      ngram_lines.push_back(std::move(f));
    } else {
      throw ParseError("model line " + std::to_string(lineno) +
                       ": unknown record");
    }
  }

  std::optional<BpeModel> bpe;
  if (scheme == Scheme::kBpe) {
    bpe = BpeModel{};
    bpe->merges = std::move(merges);
  }
  NgramModel model(order, scheme, std::move(bpe));
  for (const auto& f : ngram_lines) {
    const int k = std::stoi(f[1]);
    if (k < 0 || k >= order || f.size() != static_cast<size_t>(k) + 4) {
      throw ParseError("model NG record has wrong arity");
    }
    std::vector<std::string> ctx(f.begin() + 2, f.begin() + 2 + k);
    const std::string& sym = f[f.size() - 2];
    const uint64_t count = std::stoull(f.back());
    Context& c = model.levels_[k][ctx];
    c.next[sym] += count;
    c.total += count;
  }
  if (model.levels_[0].empty()) throw ParseError("model has no counts");
  return model;
}

NgramModel NgramModel::load_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return load(in);
}

NgramModel lm_train_file(const std::string& corpus_path, int order,
                         Scheme scheme, std::optional<BpeModel> bpe) {
  NgramModel model(order, scheme, std::move(bpe));
  std::ifstream in = open_input(corpus_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  model.train(lines);
  return model;
}

std::vector<ScoreRecord> score_pairs(const NgramModel& model,
                                     const std::vector<ContrastivePair>& pairs,
                                     int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<ScoreRecord> records(2 * pairs.size());

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      ScoreRecord ref = model.score_tokens(to_tokens(pairs[i].reference));
      ref.pair_id = pairs[i].pair_id;
      ref.side = kSideReference;
      ScoreRecord con = model.score_tokens(to_tokens(pairs[i].contrastive));
      con.pair_id = pairs[i].pair_id;
      con.side = kSideContrastive;
      records[2 * i] = std::move(ref);
      records[2 * i + 1] = std::move(con);
    }
  };

  if (jobs == 1 || pairs.size() < 2 * static_cast<size_t>(jobs)) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    const size_t n = pairs.size();
    for (int j = 0; j < jobs; ++j) {
      threads.emplace_back(work, n * j / jobs, n * (j + 1) / jobs);
    }
    for (auto& t : threads) t.join();
  }
  return records;
}

void write_scores(const std::vector<ScoreRecord>& records, std::ostream& out,
                  const KvList& provenance) {
  KvList kvs = provenance;
  kvs.emplace_back("log", "natural");
  kvs.emplace_back("eos", "included");
  out << header_line("scores/1", kvs) << '\n';
  for (const ScoreRecord& r : records) {
    out << r.pair_id << '\t' << r.side << '\t' << fmt_double(r.total_logprob)
        << '\t' << r.symbol_count << '\t' << fmt_double(r.normalized) << '\n';
  }
  if (!out) throw IoError("failed writing scores");
}

void write_scores_file(const std::vector<ScoreRecord>& records,
                       const std::string& path, const KvList& provenance) {
  std::ofstream out = open_output(path);
  write_scores(records, out, provenance);
}

std::vector<ScoreRecord> read_score_records(std::istream& in) {
  std::vector<ScoreRecord> records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 5) {
      throw ParseError("scores line " + std::to_string(lineno) +
                       ": expected 5 tab-separated fields");
    }
    ScoreRecord r;
    r.pair_id = f[0];
    r.side = f[1];
    r.total_logprob = parse_double(f[2]);
    try {
      r.symbol_count = std::stoull(f[3]);
    } catch (const std::exception&) {
      throw ParseError("scores line " + std::to_string(lineno) +
                       ": malformed symbol count '" + f[3] + "'");
    }
    r.normalized = parse_double(f[4]);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ScoreRecord> read_score_records_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_score_records(in);
}

ScoreMap index_scores(const std::vector<ContrastivePair>& pairs,
                      const std::vector<ScoreRecord>& records) {
  std::set<std::string> pair_ids;
  for (const ContrastivePair& p : pairs) pair_ids.insert(p.pair_id);

  ScoreMap map;
  std::vector<std::string> duplicates;
  uint64_t unknown = 0;
  for (const ScoreRecord& r : records) {
    if (r.side != kSideReference && r.side != kSideContrastive) {
      throw ParseError("score entry for '" + r.pair_id + "' has bad side '" +
                       r.side + "'");
    }
    if (r.symbol_count < 1) {
      throw InvalidError("score entry " + r.pair_id + "/" + r.side +
                         ": symbol count must be >= 1");
    }
    if (r.normalized > 1e-12 || r.total_logprob > 1e-12) {
      throw InvalidError("score entry " + r.pair_id + "/" + r.side +
                         ": log probabilities must be <= 0");
    }
    const double recomputed =
        r.total_logprob / static_cast<double>(r.symbol_count);
    if (std::abs(recomputed - r.normalized) > 1e-6) {
      throw InvalidError("score entry " + r.pair_id + "/" + r.side +
                         ": normalized " + fmt_double(r.normalized) +
                         " inconsistent with total/count " +
                         fmt_double(recomputed));
    }
    if (!pair_ids.count(r.pair_id)) {
      ++unknown;
      continue;
    }
    if (!map.emplace(ScoreKey{r.pair_id, r.side}, r).second) {
      duplicates.push_back(r.pair_id + "/" + r.side);
    }
  }
  if (unknown > 0) {
    std::cerr << "warning: " << unknown
              << " score entries do not match any pair id\n";
  }

  auto list_ids = [](const std::vector<std::string>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size() && i < 10; ++i) {
      if (i) s += ", ";
      s += ids[i];
    }
    if (ids.size() > 10) s += ", ...";
    return s;
  };
  if (!duplicates.empty()) {
    throw InvalidError("duplicate score entries: " + list_ids(duplicates));
  }

  std::vector<std::string> missing;
  for (const ContrastivePair& p : pairs) {
    for (const char* side : {kSideReference, kSideContrastive}) {
      if (!map.count({p.pair_id, side})) {
        missing.push_back(p.pair_id + "/" + side);
      }
    }
  }
  if (!missing.empty()) {
    throw InvalidError("missing score entries: " + list_ids(missing));
  }
  return map;
}

ScoreMap read_external_scores(const std::vector<ContrastivePair>& pairs,
                              const std::string& score_path) {
  return index_scores(pairs, read_score_records_file(score_path));
}

void export_scoring_input(const std::vector<ContrastivePair>& pairs,
                          std::ostream& out, const KvList& provenance) {
  out << header_line("scoring-input/1", provenance) << '\n';
  auto sanitize = [](std::string s) {
    for (char& c : s) {
      if (c == '\t') c = ' ';
    }
    return s;
  };
  for (const ContrastivePair& p : pairs) {
    out << p.pair_id << '\t' << kSideReference << '\t'
        << sanitize(p.source_text) << '\t' << detokenize(to_tokens(p.reference))
        << '\n';
    out << p.pair_id << '\t' << kSideContrastive << '\t'
        << sanitize(p.source_text) << '\t'
        << detokenize(to_tokens(p.contrastive)) << '\n';
  }
  if (!out) throw IoError("failed writing scoring input");
}

void export_scoring_input_file(const std::vector<ContrastivePair>& pairs,
                               const std::string& path,
                               const KvList& provenance) {
  std::ofstream out = open_output(path);
  export_scoring_input(pairs, out, provenance);
}

}  // namespace contra
