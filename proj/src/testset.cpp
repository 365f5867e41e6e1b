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

#include "contra/testset.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "contra/error.hpp"
#include "contra/version.hpp"

namespace contra {

using json = nlohmann::ordered_json;

const char* to_string(Category c) {
  switch (c) {
    case Category::kNpAgreement: return "np_agreement";
    case Category::kSubjectVerb: return "subject_verb";
    case Category::kVerbParticle: return "verb_particle";
    case Category::kPolarity: return "polarity";
    case Category::kTransliteration: return "transliteration";
  }
  return "?";
}

Category parse_category(const std::string& s) {
  for (Category c : kAllCategories) {
    if (s == to_string(c)) return c;
  }
  throw UsageError("unknown category '" + s + "'");
}

std::vector<std::string> apply_edit(const std::vector<std::string>& reference,
                                    const EditSpan& edit) {
  if (edit.start < 0 || edit.length < 0 ||
      static_cast<size_t>(edit.start) + edit.length > reference.size()) {
    throw InvalidError("invariant=edit_bounds edit span outside the reference");
  }
  std::vector<std::string> out;
  out.reserve(reference.size() + edit.replacement.size());
  out.insert(out.end(), reference.begin(), reference.begin() + edit.start);
  out.insert(out.end(), edit.replacement.begin(), edit.replacement.end());
  out.insert(out.end(), reference.begin() + edit.start + edit.length,
             reference.end());
  return out;
}

namespace {

const std::set<std::string> kSubcategories = {
    "nicht_insertion", "nicht_deletion", "kein_insertion",
    "kein_deletion",   "un_insertion",   "un_deletion"};

bool is_agreement(Category c) {
  return c == Category::kNpAgreement || c == Category::kSubjectVerb;
}

}  // namespace

void validate_pair(const ContrastivePair& pair) {
  auto fail = [&](const std::string& code, const std::string& what) {
    throw InvalidError("invariant=" + code + " pair '" + pair.pair_id + "': " +
                       what);
  };
  if (pair.pair_id.empty()) fail("pair_id", "empty pair id");
  if (pair.sentence_id.empty()) fail("sentence_id", "empty sentence id");
  if (pair.reference.empty()) fail("empty_reference", "reference has no tokens");
  if (pair.reference == pair.contrastive) {
    fail("identity", "contrastive equals reference");
  }
  if (apply_edit(pair.reference, pair.edit) != pair.contrastive) {
    fail("edit_mismatch", "edit span does not produce the contrastive side");
  }
  if (pair.distance.has_value() != is_agreement(pair.category)) {
    fail("distance_presence",
         "distance must be present exactly for agreement categories");
  }
  if (pair.distance && *pair.distance < 1) fail("distance_range", "distance < 1");
  if (pair.category == Category::kPolarity) {
    if (!kSubcategories.count(pair.subcategory)) {
      fail("subcategory", "polarity pair needs a negation subcategory");
    }
    const bool nicht = pair.subcategory.rfind("nicht", 0) == 0;
    if (nicht && pair.frequency) {
      fail("frequency_presence", "nicht pairs carry no frequency");
    }
    if (!nicht && !pair.frequency) {
      fail("frequency_presence", "kein/un pairs require a frequency");
    }
  } else {
    if (!pair.subcategory.empty()) {
      fail("subcategory", "subcategory is reserved for polarity pairs");
    }
    if (!pair.frequency) {
      fail("frequency_presence", "non-polarity pairs require a frequency");
    }
  }
}

namespace {

json pair_to_json(const ContrastivePair& p) {
  json j;
  j["pair_id"] = p.pair_id;
  j["sentence_id"] = p.sentence_id;
  j["category"] = to_string(p.category);
  if (!p.subcategory.empty()) j["subcategory"] = p.subcategory;
  if (!p.source_text.empty()) j["source_text"] = p.source_text;
  j["reference"] = p.reference;
  j["contrastive"] = p.contrastive;
  j["edit"] = {{"start", p.edit.start},
               {"length", p.edit.length},
               {"replacement", p.edit.replacement}};
  if (p.distance) j["distance"] = *p.distance;
  if (p.frequency) j["frequency"] = *p.frequency;
  j["sie_ambiguous"] = p.sie_ambiguous;
  j["generator_rule"] = p.generator_rule;
  return j;
}

ContrastivePair pair_from_json(const json& j) {
  ContrastivePair p;
  p.pair_id = j.at("pair_id").get<std::string>();
  p.sentence_id = j.at("sentence_id").get<std::string>();
  p.category = parse_category(j.at("category").get<std::string>());
  if (j.contains("subcategory")) {
    p.subcategory = j.at("subcategory").get<std::string>();
  }
  if (j.contains("source_text")) {
    p.source_text = j.at("source_text").get<std::string>();
  }
  p.reference = j.at("reference").get<std::vector<std::string>>();
  p.contrastive = j.at("contrastive").get<std::vector<std::string>>();
  const json& e = j.at("edit");
  p.edit.start = e.at("start").get<int>();
  p.edit.length = e.at("length").get<int>();
  p.edit.replacement = e.at("replacement").get<std::vector<std::string>>();
  if (j.contains("distance")) p.distance = j.at("distance").get<int>();
  if (j.contains("frequency")) p.frequency = j.at("frequency").get<uint64_t>();
  p.sie_ambiguous = j.value("sie_ambiguous", false);
  p.generator_rule = j.value("generator_rule", std::string());
  return p;
}

}  // namespace

uint64_t write_pairs(const std::vector<ContrastivePair>& pairs,
                     std::ostream& out, const KvList& provenance) {
  json header;
  header["schema"] = "contra.pairs/1";
  header["tool"] = kToolName;
  header["version"] = kToolVersion;
  for (const auto& [k, v] : provenance) header[k] = v;
  out << header.dump() << '\n';

  uint64_t written = 0;
  for (const ContrastivePair& p : pairs) {
    validate_pair(p);
    out << pair_to_json(p).dump() << '\n';
    ++written;
  }
  if (!out) throw IoError("failed writing pairs");
  return written;
}

uint64_t write_pairs_file(const std::vector<ContrastivePair>& pairs,
                          const std::string& path, const KvList& provenance) {
  std::ofstream out = open_output(path);
  return write_pairs(pairs, out, provenance);
}

std::vector<ContrastivePair> read_pairs(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty pairs file");
  json header;
  try {
    header = json::parse(line);
  } catch (const json::exception&) {
    throw ParseError("pairs line 1: malformed JSON header");
  }
  if (header.value("schema", std::string()) != "contra.pairs/1") {
    throw ParseError("unsupported pairs schema '" +
                     header.value("schema", std::string("<none>")) + "'");
  }

  std::vector<ContrastivePair> pairs;
  std::set<std::string> ids;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ContrastivePair p;
    try {
      p = pair_from_json(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError("pairs line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      validate_pair(p);
    } catch (const InvalidError& e) {
      throw InvalidError("pairs line " + std::to_string(lineno) + ": " +
                         e.what());
    }
    if (!ids.insert(p.pair_id).second) {
      throw InvalidError("pairs line " + std::to_string(lineno) +
                         ": invariant=duplicate_id pair id '" + p.pair_id +
                         "' repeats");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<ContrastivePair> read_pairs_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_pairs(in);
}

}  // namespace contra
