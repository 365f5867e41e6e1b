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

#ifndef CONTRA_ERROR_HPP_
#define CONTRA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace contra {

// Error categories map 1:1 onto the C API status codes and onto the
// single-line "error: <kind>: <message>" format the CLI prints.
enum class ErrorKind {
  kIo = 1,       // file missing, unreadable, unwritable
  kParse = 2,    // malformed input file
  kInvalid = 3,  // invariant violation in otherwise well-formed data
  kUsage = 4,    // bad arguments or incompatible options
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::kIo: return "io";
      case ErrorKind::kParse: return "parse";
      case ErrorKind::kInvalid: return "invalid";
      case ErrorKind::kUsage: return "usage";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorKind::kIo, m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::kParse, m) {}
};
struct InvalidError : Error {
  explicit InvalidError(const std::string& m) : Error(ErrorKind::kInvalid, m) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& m) : Error(ErrorKind::kUsage, m) {}
};

}  // namespace contra

#endif  // CONTRA_ERROR_HPP_
