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

#include "contra/segmentation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "contra/error.hpp"
#include "contra/utf8.hpp"

namespace contra {

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::kWord: return "word";
    case Scheme::kBpe: return "bpe";
    case Scheme::kChar: return "char";
  }
  return "?";
}

Scheme parse_scheme(const std::string& s) {
  if (s == "word") return Scheme::kWord;
  if (s == "bpe") return Scheme::kBpe;
  if (s == "char") return Scheme::kChar;
  throw UsageError("unknown segmentation scheme '" + s + "'");
}

std::string escape_symbol_text(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '<': out += "\\<"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          char buf[5];
          std::snprintf(buf, sizeof(buf), "\\x%02X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string unescape_symbol_text(const std::string& escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (size_t i = 0; i < escaped.size(); ++i) {
    char c = escaped[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 >= escaped.size()) throw ParseError("dangling escape in symbol");
    char e = escaped[++i];
    switch (e) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '<': out += '<'; break;
      case 'x': {
        if (i + 2 >= escaped.size()) throw ParseError("truncated \\x escape");
        unsigned v = 0;
        for (int k = 0; k < 2; ++k) {
          char h = escaped[++i];
          v <<= 4;
          if (h >= '0' && h <= '9') v |= h - '0';
          else if (h >= 'A' && h <= 'F') v |= h - 'A' + 10;
          else if (h >= 'a' && h <= 'f') v |= h - 'a' + 10;
          else throw ParseError("bad \\x escape in symbol");
        }
        out += static_cast<char>(v);
        break;
      }
      default:
        throw ParseError("unknown escape in symbol");
    }
  }
  return out;
}

std::string Symbol::render() const {
  std::string s = escape_symbol_text(text);
  if (word_end) s += "</w>";
  return s;
}

Symbol parse_rendered_symbol(const std::string& rendered) {
  Symbol sym;
  std::string body = rendered;
  if (body.size() >= 4 && body.compare(body.size() - 4, 4, "</w>") == 0) {
    sym.word_end = true;
    body.resize(body.size() - 4);
  }
  sym.text = unescape_symbol_text(body);
  return sym;
}

namespace {

std::vector<Symbol> word_to_symbols(const std::string& word) {
  std::vector<Symbol> syms;
  for (char32_t c : utf8::decode(word)) {
    syms.push_back({utf8::encode_one(c), false});
  }
  if (!syms.empty()) syms.back().word_end = true;
  return syms;
}

using SymbolPair = std::pair<Symbol, Symbol>;

std::pair<std::string, std::string> render_pair(const SymbolPair& p) {
  return {p.first.render(), p.second.render()};
}

// Merges every left-to-right occurrence of `pair` in `syms`.
bool merge_in_word(std::vector<Symbol>* syms, const SymbolPair& pair) {
  bool changed = false;
  std::vector<Symbol> out;
  out.reserve(syms->size());
  size_t i = 0;
  while (i < syms->size()) {
    if (i + 1 < syms->size() && (*syms)[i] == pair.first &&
        (*syms)[i + 1] == pair.second) {
      out.push_back({pair.first.text + pair.second.text, pair.second.word_end});
      i += 2;
      changed = true;
    } else {
      out.push_back((*syms)[i]);
      i += 1;
    }
  }
  if (changed) *syms = std::move(out);
  return changed;
}

}  // namespace

BpeModel bpe_learn(const std::map<std::string, uint64_t>& word_freq,
                   uint32_t merge_count) {
  if (word_freq.empty()) throw InvalidError("empty training input");
  if (merge_count < 1) throw UsageError("merge count must be >= 1");

  struct Word {
    std::vector<Symbol> syms;
    uint64_t freq;
  };
  std::vector<Word> words;
  words.reserve(word_freq.size());
  for (const auto& [w, f] : word_freq) {
    std::vector<Symbol> syms = word_to_symbols(w);
    if (!syms.empty() && f > 0) words.push_back({std::move(syms), f});
  }
  if (words.empty()) throw InvalidError("empty training input");

  std::map<SymbolPair, uint64_t> counts;
  std::map<SymbolPair, std::set<size_t>> where;
  auto add_word_pairs = [&](size_t wi, int64_t sign) {
    const Word& w = words[wi];
    for (size_t i = 0; i + 1 < w.syms.size(); ++i) {
      SymbolPair p{w.syms[i], w.syms[i + 1]};
      if (sign > 0) {
        counts[p] += w.freq;
        where[p].insert(wi);
      } else {
        auto it = counts.find(p);
        it->second -= w.freq;
        if (it->second == 0) {
          counts.erase(it);
          where.erase(p);
        }
      }
    }
  };
  for (size_t wi = 0; wi < words.size(); ++wi) add_word_pairs(wi, +1);

  BpeModel model;
  model.vocab_goal = merge_count;
  std::set<SymbolPair> used;

  while (model.merges.size() < merge_count) {
    // Highest count wins; ties break on the rendered pair, bytewise.
    const SymbolPair* best = nullptr;
    uint64_t best_count = 1;  // pairs must occur at least twice
    for (const auto& [p, c] : counts) {
      if (used.count(p)) continue;
      if (c > best_count ||
          (best && c == best_count && render_pair(p) < render_pair(*best))) {
        best = &p;
        best_count = c;
      }
    }
    if (!best) break;

    SymbolPair pair = *best;
    model.merges.push_back(pair);
    used.insert(pair);

    std::set<size_t> affected = where[pair];
    for (size_t wi : affected) {
      add_word_pairs(wi, -1);
      merge_in_word(&words[wi].syms, pair);
      add_word_pairs(wi, +1);
    }
  }
  return model;
}

SymbolSequence BpeModel::apply_word(const std::string& word) const {
  std::vector<Symbol> syms = word_to_symbols(word);

  std::map<SymbolPair, size_t> rank;
  for (size_t i = 0; i < merges.size(); ++i) {
    rank.emplace(merges[i], i);
  }

  // Repeatedly merge the lowest-ranked pair present, so each word ends up
  // in the canonical greedy segmentation with no mergeable pair left.
  while (syms.size() > 1) {
    size_t best_rank = merges.size();
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = rank.find({syms[i], syms[i + 1]});
      if (it != rank.end() && it->second < best_rank) best_rank = it->second;
    }
    if (best_rank == merges.size()) break;
    merge_in_word(&syms, merges[best_rank]);
  }

  SymbolSequence seq;
  seq.scheme = Scheme::kBpe;
  seq.symbols = std::move(syms);
  return seq;
}

SymbolSequence BpeModel::apply(const std::vector<Token>& tokens) const {
  SymbolSequence seq;
  seq.scheme = Scheme::kBpe;
  for (const Token& t : tokens) {
    SymbolSequence word = apply_word(t.surface);
    seq.symbols.insert(seq.symbols.end(), word.symbols.begin(),
                       word.symbols.end());
  }
  return seq;
}

SymbolSequence word_segment(const std::vector<Token>& tokens) {
  SymbolSequence seq;
  seq.scheme = Scheme::kWord;
  for (const Token& t : tokens) seq.symbols.push_back({t.surface, true});
  return seq;
}

SymbolSequence char_segment(const std::vector<Token>& tokens) {
  SymbolSequence seq;
  seq.scheme = Scheme::kChar;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) seq.symbols.push_back({" ", false});
    std::vector<char32_t> sc = utf8::decode(tokens[i].surface);
    for (size_t k = 0; k < sc.size(); ++k) {
      seq.symbols.push_back({utf8::encode_one(sc[k]), k + 1 == sc.size()});
    }
  }
  return seq;
}

std::vector<std::string> SymbolSequence::reconstruct_words() const {
  std::vector<std::string> words;
  std::string acc;
  for (const Symbol& s : symbols) {
    if (scheme == Scheme::kChar && s.text == " " && !s.word_end) {
      continue;  // separator symbol; tokens never contain spaces
    }
    acc += s.text;
    if (s.word_end) {
      words.push_back(std::move(acc));
      acc.clear();
    }
  }
  if (!acc.empty()) words.push_back(std::move(acc));
  return words;
}

BpeModel bpe_learn_corpora(const std::vector<std::string>& corpus_paths,
                           uint32_t merge_count) {
  std::map<std::string, uint64_t> word_freq;
  for (const std::string& path : corpus_paths) {
    std::ifstream in = open_input(path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        for (const Token& t : tokenize(line)) ++word_freq[t.surface];
      } catch (const ParseError&) {
        // skip undecodable lines, same policy as stats building
      }
    }
  }
  if (word_freq.empty()) throw InvalidError("empty training input");
  return bpe_learn(word_freq, merge_count);
}

void write_bpe_model(const BpeModel& model, std::ostream& out,
                     const KvList& provenance) {
  KvList kvs;
  kvs.emplace_back("version", "1");
  kvs.emplace_back("merges", std::to_string(model.merges.size()));
  kvs.emplace_back("goal", std::to_string(model.vocab_goal));
  kvs.emplace_back("marker", model.end_marker);
  kvs.insert(kvs.end(), provenance.begin(), provenance.end());
  out << header_line("bpe/1", kvs) << '\n';
  for (const auto& [l, r] : model.merges) {
    out << l.render() << '\t' << r.render() << '\n';
  }
}

void write_bpe_model_file(const BpeModel& model, const std::string& path,
                          const KvList& provenance) {
  std::ofstream out = open_output(path);
  write_bpe_model(model, out, provenance);
  if (!out) throw IoError("failed writing BPE model to '" + path + "'");
}

BpeModel read_bpe_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty BPE model file");
  auto header = parse_header_line(line, "bpe/1");
  BpeModel model;
  if (auto it = header.find("goal"); it != header.end()) {
    model.vocab_goal = static_cast<uint32_t>(std::stoul(it->second));
  }
  if (auto it = header.find("marker"); it != header.end()) {
    model.end_marker = it->second;
  }

  std::set<SymbolPair> seen;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 2) {
      throw ParseError("BPE model line " + std::to_string(lineno) +
                       ": expected two tab-separated symbols");
    }
    SymbolPair p{parse_rendered_symbol(f[0]), parse_rendered_symbol(f[1])};
    if (!seen.insert(p).second) {
      throw InvalidError("BPE model line " + std::to_string(lineno) +
                         ": duplicate merge pair");
    }
    model.merges.push_back(std::move(p));
  }
  return model;
}

BpeModel read_bpe_model_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_bpe_model(in);
}

}  // namespace contra
