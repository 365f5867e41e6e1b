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

#ifndef CONTRA_TESTS_TEST_UTIL_HPP_
#define CONTRA_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "contra/lexicons.hpp"
#include "contra/stats.hpp"
#include "contra/tokenizer.hpp"

namespace testutil {

inline std::string data_dir() { return CONTRA_DATA_DIR; }
inline std::string lexicon_dir() { return data_dir() + "/lexicons"; }
inline std::string test_data_dir() { return CONTRA_TEST_DATA_DIR; }

inline const contra::Lexicons& lexicons() {
  static const contra::Lexicons lex = contra::Lexicons::load(lexicon_dir());
  return lex;
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    auto base = std::filesystem::temp_directory_path();
    path_ = base / ("contra_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline contra::Sentence sentence(const std::string& line,
                                 const std::string& id = "t1") {
  return contra::make_sentence(id, line);
}

inline contra::CorpusStats stats_from_lines(
    const std::vector<std::string>& lines) {
  return contra::build_stats(lines, lexicons());
}

}  // namespace testutil

#endif  // CONTRA_TESTS_TEST_UTIL_HPP_
