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

#ifndef CONTRA_PROVENANCE_HPP_
#define CONTRA_PROVENANCE_HPP_

#include <cstdint>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contra {

using KvList = std::vector<std::pair<std::string, std::string>>;

uint64_t fnv1a64(std::string_view data);

// Hash of the semantic configuration of a run (seed, categories, orders...).
// Input paths and execution knobs such as --jobs are deliberately excluded
// so that outputs are byte-identical across machines and thread counts.
std::string config_hash(const KvList& kvs);

// First line of every text output:
//   #contra/<version> format=<fmt> key=value key=value ...
// Values must not contain whitespace.
std::string header_line(const std::string& format, const KvList& kvs);

// Parses a header line, checking tool name and format. Returns key/values.
std::map<std::string, std::string> parse_header_line(
    const std::string& line, const std::string& expect_format);

// Shortest round-trip decimal text for a double ('.' separator, locale-free).
std::string fmt_double(double v);
double parse_double(const std::string& s);  // throws ParseError

std::ifstream open_input(const std::string& path);   // throws IoError
std::ofstream open_output(const std::string& path);  // throws IoError

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace contra

#endif  // CONTRA_PROVENANCE_HPP_
