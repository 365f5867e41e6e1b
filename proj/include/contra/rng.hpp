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

#ifndef CONTRA_RNG_HPP_
#define CONTRA_RNG_HPP_

#include <cstdint>
#include <string_view>

#include "contra/provenance.hpp"

namespace contra {

// Deterministic generator with platform-independent output. Each injection
// site gets its own stream derived from (seed, sentence id, category, site
// index), so adding or removing one sentence never perturbs the randomness
// used for any other.
class SiteRng {
 public:
  explicit SiteRng(uint64_t state) : state_(state) {}

  static SiteRng for_site(uint64_t seed, std::string_view sentence_id,
                          std::string_view category, uint64_t site_index) {
    uint64_t h = fnv1a64(sentence_id);
    h = h * 0x9E3779B97F4A7C15ULL + fnv1a64(category);
    h = h * 0x9E3779B97F4A7C15ULL + site_index;
    return SiteRng(seed ^ h);
  }

  uint64_t next() {
    // splitmix64
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be > 0.
  uint64_t bounded(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

}  // namespace contra

#endif  // CONTRA_RNG_HPP_
