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

#include "contra/stats.hpp"

#include <fstream>
#include <thread>

#include "contra/annotator.hpp"
#include "contra/error.hpp"

namespace contra {

uint64_t CorpusStats::frequency(const std::string& form) const {
  auto it = word_freq.find(form);
  return it == word_freq.end() ? 0 : it->second;
}

uint64_t CorpusStats::particle_count(const std::string& verb,
                                     const std::string& particle) const {
  auto it = verb_particle.find({verb, particle});
  return it == verb_particle.end() ? 0 : it->second;
}

void CorpusStats::add_sentence(const Sentence& sentence,
                               const Lexicons& lexicons) {
  for (const Token& t : sentence.tokens) {
    ++word_freq[t.surface];
    ++token_count;
  }
  for (const ParticleOccurrence& occ : find_particles(sentence, lexicons)) {
    ++verb_particle[{occ.verb_form, occ.particle}];
  }
}

void CorpusStats::add_line(const std::string& line, const Lexicons& lexicons) {
  Sentence s;
  try {
    s.tokens = tokenize(line);
  } catch (const ParseError&) {
    ++rejected_lines;
    return;
  }
  add_sentence(s, lexicons);
}

void CorpusStats::merge(const CorpusStats& other) {
  if (normalization_tag != other.normalization_tag) {
    throw InvalidError("cannot merge stats with normalization tags '" +
                       normalization_tag + "' and '" + other.normalization_tag +
                       "'");
  }
  for (const auto& [form, n] : other.word_freq) word_freq[form] += n;
  for (const auto& [key, n] : other.verb_particle) verb_particle[key] += n;
  token_count += other.token_count;
  rejected_lines += other.rejected_lines;
}

CorpusStats build_stats(const std::vector<std::string>& lines,
                        const Lexicons& lexicons, int jobs) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || lines.size() < 2 * static_cast<size_t>(jobs)) {
    CorpusStats stats;
    for (const std::string& line : lines) stats.add_line(line, lexicons);
    return stats;
  }

  std::vector<CorpusStats> partials(jobs);
  std::vector<std::thread> threads;
  const size_t n = lines.size();
  for (int j = 0; j < jobs; ++j) {
    size_t begin = n * j / jobs;
    size_t end = n * (j + 1) / jobs;
    threads.emplace_back([&, begin, end, j] {
      for (size_t i = begin; i < end; ++i) partials[j].add_line(lines[i], lexicons);
    });
  }
  for (auto& t : threads) t.join();

  CorpusStats stats;
  for (const CorpusStats& p : partials) stats.merge(p);
  return stats;
}

CorpusStats build_stats_file(const std::string& path, const Lexicons& lexicons,
                             int jobs) {
  std::ifstream in = open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return build_stats(lines, lexicons, jobs);
}

void write_stats(const CorpusStats& stats, std::ostream& out,
                 const KvList& provenance) {
  KvList kvs = provenance;
  kvs.emplace_back("normalization", stats.normalization_tag);
  kvs.emplace_back("rejected_lines", std::to_string(stats.rejected_lines));
  out << header_line("stats/1", kvs) << '\n';
  for (const auto& [form, n] : stats.word_freq) {
    out << "WORD\t" << form << '\t' << n << '\n';
  }
  for (const auto& [key, n] : stats.verb_particle) {
    out << "VP\t" << key.first << '\t' << key.second << '\t' << n << '\n';
  }
}

void write_stats_file(const CorpusStats& stats, const std::string& path,
                      const KvList& provenance) {
  std::ofstream out = open_output(path);
  write_stats(stats, out, provenance);
  if (!out) throw IoError("failed writing stats to '" + path + "'");
}

CorpusStats read_stats(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty stats file");
  auto header = parse_header_line(line, "stats/1");
  CorpusStats stats;
  auto tag = header.find("normalization");
  if (tag == header.end()) {
    throw ParseError("stats header lacks normalization tag");
  }
  stats.normalization_tag = tag->second;

  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    uint64_t count = 0;
    try {
      if (f[0] == "WORD" && f.size() == 3) {
        count = std::stoull(f[2]);
        stats.word_freq[f[1]] = count;
        stats.token_count += count;
      } else if (f[0] == "VP" && f.size() == 4) {
        count = std::stoull(f[3]);
        stats.verb_particle[{f[1], f[2]}] = count;
      } else {
        throw ParseError("bad record");
      }
    } catch (const std::exception&) {
      throw ParseError("stats line " + std::to_string(lineno) +
                       ": malformed record");
    }
    if (count == 0) {
      throw InvalidError("stats line " + std::to_string(lineno) +
                         ": stored count must be >= 1");
    }
  }
  return stats;
}

CorpusStats read_stats_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_stats(in);
}

}  // namespace contra
