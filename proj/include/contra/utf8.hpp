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

#ifndef CONTRA_UTF8_HPP_
#define CONTRA_UTF8_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace contra::utf8 {

// Strict decoder: rejects overlong forms, surrogates and out-of-range
// scalars. Returns false on the first invalid byte.
bool try_decode(std::string_view bytes, std::vector<char32_t>* out);

// Like try_decode but throws ParseError.
std::vector<char32_t> decode(std::string_view bytes);

std::string encode(const std::vector<char32_t>& scalars);
std::string encode_one(char32_t scalar);

// Letter and case predicates covering ASCII, Latin-1 Supplement,
// Latin Extended-A/B (to U+024F), Greek and Cyrillic base blocks.
// Everything else reports false / identity case mapping.
bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
char32_t to_upper(char32_t c);
char32_t to_lower(char32_t c);

bool is_whitespace(char32_t c);

// Canonical composition (NFC) restricted to the Latin repertoire:
// base + combining mark pairs whose composition lies in U+00C0..U+024F.
// Applied iteratively left to right, so stacked marks compose too.
// This covers German and general Western European text; scripts outside
// the table pass through unchanged.
std::vector<char32_t> compose_latin(const std::vector<char32_t>& scalars);

}  // namespace contra::utf8

#endif  // CONTRA_UTF8_HPP_
