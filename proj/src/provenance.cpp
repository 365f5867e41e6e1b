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

#include "contra/provenance.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "contra/error.hpp"
#include "contra/version.hpp"

namespace contra {

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const KvList& kvs) {
  KvList sorted = kvs;
  std::sort(sorted.begin(), sorted.end());
  std::string canon;
  for (const auto& [k, v] : sorted) {
    canon += k;
    canon += '=';
    canon += v;
    canon += '\n';
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(canon)));
  return buf;
}

std::string header_line(const std::string& format, const KvList& kvs) {
  std::string line = "#";
  line += kToolName;
  line += '/';
  line += kToolVersion;
  line += " format=";
  line += format;
  for (const auto& [k, v] : kvs) {
    line += ' ';
    line += k;
    line += '=';
    line += v;
  }
  return line;
}

std::map<std::string, std::string> parse_header_line(
    const std::string& line, const std::string& expect_format) {
  std::string prefix = std::string("#") + kToolName + "/";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError("missing " + std::string(kToolName) + " header line");
  }
  std::map<std::string, std::string> kvs;
  for (const std::string& field : split(line, ' ')) {
    auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    kvs[field.substr(0, eq)] = field.substr(eq + 1);
  }
  auto it = kvs.find("format");
  if (it == kvs.end() || it->second != expect_format) {
    throw ParseError("expected format=" + expect_format + " in header, got '" +
                     (it == kvs.end() ? std::string("<none>") : it->second) +
                     "'");
  }
  return kvs;
}

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("malformed number '" + s + "'");
  }
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace contra
