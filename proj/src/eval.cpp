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

#include "contra/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>

#include "contra/error.hpp"

namespace contra {

namespace {

constexpr double kSignificanceLevel = 0.05;

const char* kNegationCells[] = {"nicht_insertion", "kein_insertion",
                                "un_insertion",    "nicht_deletion",
                                "kein_deletion",   "un_deletion"};

}  // namespace

std::vector<Outcome> judge(const std::vector<ContrastivePair>& pairs,
                           const ScoreMap& scores) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(pairs.size());
  for (const ContrastivePair& p : pairs) {
    auto ref = scores.find({p.pair_id, kSideReference});
    auto con = scores.find({p.pair_id, kSideContrastive});
    if (ref == scores.end() || con == scores.end()) {
      throw InvalidError("no scores for pair '" + p.pair_id + "'");
    }
    Outcome o;
    o.pair_id = p.pair_id;
    o.success = ref->second.normalized > con->second.normalized;
    o.category = p.category;
    o.subcategory = p.subcategory;
    o.distance = p.distance;
    o.frequency = p.frequency;
    o.sie_ambiguous = p.sie_ambiguous;
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

double Tally::accuracy() const {
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(successes) / static_cast<double>(n);
}

EvalReport accuracy_table(const std::vector<Outcome>& outcomes,
                          const std::string& system) {
  EvalReport r;
  r.system = system;
  for (const Outcome& o : outcomes) {
    ++r.total;
    r.by_category[o.category].add(o.success);
    if (o.category == Category::kPolarity) {
      r.by_subcategory[o.subcategory].add(o.success);
      if (o.subcategory.ends_with("insertion")) {
        r.polarity_insertion.add(o.success);
      } else {
        r.polarity_deletion.add(o.success);
      }
    }
    if (o.category == Category::kSubjectVerb && o.sie_ambiguous) {
      r.sie_subset.add(o.success);
    }
  }
  return r;
}

int distance_bucket(int distance) {
  return distance >= 16 ? 16 : distance;
}

std::vector<DistancePoint> bucket_by_distance(
    const std::vector<Outcome>& outcomes) {
  std::map<int, Tally> buckets;
  for (const Outcome& o : outcomes) {
    if (!o.distance) continue;
    buckets[distance_bucket(*o.distance)].add(o.success);
  }
  std::vector<DistancePoint> out;
  for (const auto& [bucket, tally] : buckets) {
    out.push_back({bucket, tally.accuracy(), tally.n});
  }
  return out;
}

std::vector<FrequencyPoint> bucket_by_frequency(
    const std::vector<Outcome>& outcomes) {
  std::map<int, Tally> bands;  // -1 = frequency 0, k >= 0 = [2^k, 2^(k+1))
  for (const Outcome& o : outcomes) {
    if (!o.frequency) continue;
    int band = -1;
    if (*o.frequency >= 1) {
      band = 0;
      while ((uint64_t{2} << band) <= *o.frequency) ++band;
    }
    bands[band].add(o.success);
  }
  std::vector<FrequencyPoint> out;
  for (const auto& [band, tally] : bands) {
    FrequencyPoint p;
    p.accuracy = tally.accuracy();
    p.n = tally.n;
    if (band < 0) {
      p.lower = 0;
      p.label = "0";
    } else {
      p.lower = uint64_t{1} << band;
      uint64_t hi = (uint64_t{2} << band) - 1;
      p.label = p.lower == hi ? std::to_string(p.lower)
                              : std::to_string(p.lower) + "-" + std::to_string(hi);
    }
    out.push_back(std::move(p));
  }
  return out;
}

SignTestResult sign_test(const std::vector<Outcome>& outcomes_a,
                         const std::vector<Outcome>& outcomes_b) {
  std::map<std::string, bool> a;
  for (const Outcome& o : outcomes_a) a[o.pair_id] = o.success;

  SignTestResult r;
  size_t matched = 0;
  for (const Outcome& o : outcomes_b) {
    auto it = a.find(o.pair_id);
    if (it == a.end()) {
      throw InvalidError("sign test: pair '" + o.pair_id +
                         "' missing from the other system");
    }
    ++matched;
    if (it->second && !o.success) ++r.a_only;
    if (!it->second && o.success) ++r.b_only;
  }
  if (matched != a.size()) {
    throw InvalidError("sign test: systems judged different pair sets");
  }

  r.discordant = r.a_only + r.b_only;
  if (r.discordant == 0) {
    r.p = 1.0;
    r.note = "no discordant pairs";
    return r;
  }

  const uint64_t n = r.discordant;
  const uint64_t m = std::min(r.a_only, r.b_only);
  const double log2n = static_cast<double>(n) * std::log(2.0);
  double tail = 0;
  for (uint64_t i = 0; i <= m; ++i) {
    const double lchoose = std::lgamma(static_cast<double>(n) + 1) -
                           std::lgamma(static_cast<double>(i) + 1) -
                           std::lgamma(static_cast<double>(n - i) + 1);
    tail += std::exp(lchoose - log2n);
  }
  r.p = std::min(1.0, 2.0 * tail);
  return r;
}

std::string format_pct1(const Tally& t) {
  if (!t.defined()) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * t.accuracy());
  return buf;
}

namespace {

std::string fmt_acc(const Tally& t) {
  return t.defined() ? fmt_double(t.accuracy()) : "-";
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    out += ok ? c : '_';
  }
  return out.empty() ? "system" : out;
}

struct ColumnSpec {
  std::string name;
  Tally EvalReport::* direct = nullptr;
  std::optional<Category> category;
};

Tally column_tally(const EvalReport& r, const ColumnSpec& col) {
  if (col.direct) return r.*(col.direct);
  auto it = r.by_category.find(*col.category);
  return it == r.by_category.end() ? Tally{} : it->second;
}

std::vector<Outcome> filter_outcomes(const std::vector<Outcome>& outcomes,
                                     Category category,
                                     const std::string& direction) {
  std::vector<Outcome> out;
  for (const Outcome& o : outcomes) {
    if (o.category != category) continue;
    if (!direction.empty() && !o.subcategory.ends_with(direction)) continue;
    out.push_back(o);
  }
  return out;
}

}  // namespace

void render_report(
    const std::vector<std::pair<std::string, std::vector<Outcome>>>& systems,
    const std::string& report_dir, const KvList& provenance) {
  if (systems.empty()) throw UsageError("no systems to report on");
  std::filesystem::create_directories(report_dir);

  std::vector<EvalReport> reports;
  reports.reserve(systems.size());
  for (const auto& [label, outcomes] : systems) {
    reports.push_back(accuracy_table(outcomes, label));
  }

  const std::vector<ColumnSpec> categories = {
      {"np_agreement", nullptr, Category::kNpAgreement},
      {"subject_verb", nullptr, Category::kSubjectVerb},
      {"verb_particle", nullptr, Category::kVerbParticle},
      {"polarity_insertion", &EvalReport::polarity_insertion, {}},
      {"polarity_deletion", &EvalReport::polarity_deletion, {}},
      {"transliteration", nullptr, Category::kTransliteration},
  };

  // by_category.tsv - full precision accuracies.
  {
    std::ofstream out = open_output(report_dir + "/by_category.tsv");
    out << header_line("report-category/1", provenance) << '\n';
    out << "system";
    for (const auto& col : categories) out << '\t' << col.name;
    out << '\n' << "n";
    for (const auto& col : categories) {
      out << '\t' << column_tally(reports.front(), col).n;
    }
    out << '\n';
    for (const EvalReport& r : reports) {
      out << r.system;
      for (const auto& col : categories) out << '\t' << fmt_acc(column_tally(r, col));
      out << '\n';
    }
  }

  // negation.tsv - the six polarity cells.
  {
    std::ofstream out = open_output(report_dir + "/negation.tsv");
    out << header_line("report-negation/1", provenance) << '\n';
    out << "system";
    for (const char* cell : kNegationCells) out << '\t' << cell;
    out << '\n' << "n";
    for (const char* cell : kNegationCells) {
      auto it = reports.front().by_subcategory.find(cell);
      out << '\t' << (it == reports.front().by_subcategory.end() ? 0 : it->second.n);
    }
    out << '\n';
    for (const EvalReport& r : reports) {
      out << r.system;
      for (const char* cell : kNegationCells) {
        auto it = r.by_subcategory.find(cell);
        out << '\t' << (it == r.by_subcategory.end() ? "-" : fmt_acc(it->second));
      }
      out << '\n';
    }
  }

  // Plot data, one file per system.
  for (const auto& [label, outcomes] : systems) {
    const std::string safe = sanitize_label(label);
    {
      std::ofstream out = open_output(report_dir + "/distance_" + safe + ".plot");
      out << header_line("plot-distance/1", provenance) << '\n';
      for (const DistancePoint& p :
           bucket_by_distance(filter_outcomes(outcomes, Category::kSubjectVerb,
                                              ""))) {
        out << p.bucket << ' ' << fmt_double(p.accuracy) << '\n';
      }
    }
    {
      std::ofstream out =
          open_output(report_dir + "/frequency_" + safe + ".plot");
      out << header_line("plot-frequency/1", provenance) << '\n';
      for (const FrequencyPoint& p : bucket_by_frequency(outcomes)) {
        out << p.lower << ' ' << fmt_double(p.accuracy) << '\n';
      }
    }
  }

  // Which systems are statistically indistinguishable from the best, per
  // column: marked bold in the summary like the best itself.
  auto best_marks = [&](const ColumnSpec& col,
                        Category category, const std::string& direction) {
    std::vector<bool> bold(systems.size(), false);
    size_t best = 0;
    bool any = false;
    for (size_t i = 0; i < reports.size(); ++i) {
      Tally t = column_tally(reports[i], col);
      if (!t.defined()) continue;
      if (!any || t.accuracy() > column_tally(reports[best], col).accuracy()) {
        best = i;
        any = true;
      }
    }
    if (!any) return bold;
    bold[best] = true;
    if (systems.size() > 1) {
      auto best_filtered = filter_outcomes(systems[best].second, category,
                                           direction);
      for (size_t i = 0; i < systems.size(); ++i) {
        if (i == best) continue;
        if (!column_tally(reports[i], col).defined()) continue;
        SignTestResult st = sign_test(
            best_filtered, filter_outcomes(systems[i].second, category,
                                           direction));
        if (st.p >= kSignificanceLevel) bold[i] = true;
      }
    }
    return bold;
  };

  // summary.md
  {
    std::ofstream out = open_output(report_dir + "/summary.md");
    out << "# Contrastive evaluation summary\n\n";
    out << "- tool: " << header_line("report/1", provenance).substr(1) << "\n";
    out << "- systems: " << systems.size() << "\n";
    out << "- pairs judged: " << reports.front().total << "\n";
    out << "- ties count as failures; accuracies in percent (one decimal)\n";
    if (systems.size() > 1) {
      out << "- bold: best per column, and systems whose difference to the "
             "best is not significant (two-sided exact sign test, p >= "
          << fmt_double(kSignificanceLevel) << ")\n";
    }
    out << "\n## Accuracy by category\n\n";

    out << "| system |";
    for (const auto& col : categories) out << ' ' << col.name << " |";
    out << "\n|---|";
    for (size_t i = 0; i < categories.size(); ++i) out << "---|";
    out << "\n| n |";
    for (const auto& col : categories) {
      out << ' ' << column_tally(reports.front(), col).n << " |";
    }
    out << '\n';

    std::vector<std::vector<bool>> cat_bold;
    for (const auto& col : categories) {
      Category cat = col.category ? *col.category : Category::kPolarity;
      std::string direction;
      if (col.name == "polarity_insertion") direction = "insertion";
      if (col.name == "polarity_deletion") direction = "deletion";
      cat_bold.push_back(best_marks(col, cat, direction));
    }
    for (size_t i = 0; i < reports.size(); ++i) {
      out << "| " << reports[i].system << " |";
      for (size_t c = 0; c < categories.size(); ++c) {
        Tally t = column_tally(reports[i], categories[c]);
        std::string cell = format_pct1(t);
        if (t.defined() && cat_bold[c][i]) cell = "**" + cell + "**";
        out << ' ' << cell << " |";
      }
      out << '\n';
    }

    out << "\n## Negation subcategories\n\n";
    out << "| system |";
    for (const char* cell : kNegationCells) out << ' ' << cell << " |";
    out << "\n|---|";
    for (size_t i = 0; i < std::size(kNegationCells); ++i) out << "---|";
    out << "\n| n |";
    for (const char* cell : kNegationCells) {
      auto it = reports.front().by_subcategory.find(cell);
      out << ' '
          << (it == reports.front().by_subcategory.end() ? 0 : it->second.n)
          << " |";
    }
    out << '\n';
    for (const EvalReport& r : reports) {
      out << "| " << r.system << " |";
      for (const char* cell : kNegationCells) {
        auto it = r.by_subcategory.find(cell);
        out << ' '
            << (it == r.by_subcategory.end() ? "-" : format_pct1(it->second))
            << " |";
      }
      out << '\n';
    }

    out << "\n## Ambiguous 'sie' subject-verb subset\n\n";
    for (const EvalReport& r : reports) {
      out << "- " << r.system << ": " << format_pct1(r.sie_subset) << " (n="
          << r.sie_subset.n << ")\n";
    }

    out << "\n## Distance curves\n\n";
    out << "Subject-verb accuracy by subject-verb distance; bucket 16 "
           "collects all distances >= 16. Data: distance_<system>.plot\n\n";
    for (const auto& [label, outcomes] : systems) {
      out << "- " << label << ": distance_" << sanitize_label(label)
          << ".plot, frequency_" << sanitize_label(label) << ".plot\n";
    }

    if (systems.size() > 1) {
      out << "\n## Pairwise sign tests (all categories pooled)\n\n";
      out << "| A | B | discordant | A only | B only | p |\n";
      out << "|---|---|---|---|---|---|\n";
      for (size_t i = 0; i < systems.size(); ++i) {
        for (size_t k = i + 1; k < systems.size(); ++k) {
          SignTestResult st = sign_test(systems[i].second, systems[k].second);
          out << "| " << systems[i].first << " | " << systems[k].first << " | "
              << st.discordant << " | " << st.a_only << " | " << st.b_only
              << " | " << fmt_double(st.p) << " |\n";
        }
      }
    }
  }
}

}  // namespace contra
