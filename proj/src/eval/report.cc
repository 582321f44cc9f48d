// Copyright 2026 The catmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "catmine/eval/report.h"

#include <algorithm>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "json.hpp"

namespace catmine::eval {
namespace {

using nlohmann::json;

std::string Percent(const std::optional<double>& v) {
  return v ? fmt::format("{:.2f}", *v * 100.0) : std::string("n/a");
}

json Optional(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json ClassJson(const ClassMetrics& m) {
  // "class_accuracy" is the same number as precision.
  return {{"precision", Optional(m.precision)},
          {"class_accuracy", Optional(m.precision)},
          {"recall", Optional(m.recall)},
          {"f1", Optional(m.f1)},
          {"support", m.support}};
}

}  // namespace

EvaluationReport Evaluate(const std::map<std::string, Label>& predictions,
                          const AssessmentMatrix& assessments,
                          const std::vector<int>& levels) {
  EvaluationReport report;
  report.assessed = assessments.samples();
  for (const auto& id : assessments.ids) {
    if (!predictions.contains(id)) report.unmatched_ids.push_back(id);
  }
  std::vector<int> sorted = levels;
  std::sort(sorted.rbegin(), sorted.rend());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (const int x : sorted) {
    const GroundTruth gt = MajorityGroundTruth(assessments, x);
    LevelReport level;
    level.level = x;
    level.evaluators = static_cast<int>(assessments.evaluators());
    level.excluded = gt.excluded.size();
    Confusion c;
    for (const std::size_t row : gt.user_pos) {
      const auto it = predictions.find(assessments.ids[row]);
      if (it == predictions.end()) continue;
      ++level.user_pos;
      ++(it->second == Label::kInteresting ? c.tp : c.fn);
    }
    for (const std::size_t row : gt.user_neg) {
      const auto it = predictions.find(assessments.ids[row]);
      if (it == predictions.end()) continue;
      ++level.user_neg;
      ++(it->second == Label::kInteresting ? c.fp : c.tn);
    }
    level.metrics = MetricsFromConfusion(c);
    report.levels.push_back(level);
  }
  if (assessments.samples() >= 2 && assessments.evaluators() >= 2) {
    report.kappa = FleissKappa(assessments);
  }
  return report;
}

std::string RenderTable(const EvaluationReport& report) {
  std::string out;
  out += fmt::format("{:<9} | {:^23} | {:^23} | {:>7} | {:>5}\n", "Agreement",
                     "userNeg samples", "userPos samples", "", "");
  out += fmt::format("{:<9} | {:>7} {:>7} {:>7} | {:>7} {:>7} {:>7} | {:>7} | {:>5}\n",
                     "level", "Rec.", "Prec.", "F1", "Rec.", "Prec.", "F1",
                     "Acc.", "n");
  for (const auto& l : report.levels) {
    const auto& m = l.metrics;
    const std::size_t n = m.confusion.total();
    out += fmt::format(
        "{:<9} | {:>7} {:>7} {:>7} | {:>7} {:>7} {:>7} | {:>7} | {:>5}\n",
        fmt::format("{}/{}", l.level, l.evaluators),
        Percent(m.non_interesting.recall), Percent(m.non_interesting.precision),
        Percent(m.non_interesting.f1), Percent(m.interesting.recall),
        Percent(m.interesting.precision), Percent(m.interesting.f1),
        n ? Percent(m.accuracy) : std::string("n/a"), n);
  }
  if (report.kappa) {
    const auto& k = *report.kappa;
    out += fmt::format("Fleiss kappa {:.4f} (95% CI {:.4f} .. {:.4f})\n", k.kappa,
                       k.ci_low, k.ci_high);
  }
  if (!report.unmatched_ids.empty()) {
    out += fmt::format("{} assessed samples have no prediction\n",
                       report.unmatched_ids.size());
  }
  return out;
}

std::string RenderJson(const EvaluationReport& report) {
  json doc;
  doc["assessed"] = report.assessed;
  doc["unmatched_ids"] = report.unmatched_ids;
  json levels = json::array();
  for (const auto& l : report.levels) {
    const auto& c = l.metrics.confusion;
    levels.push_back({
        {"level", fmt::format("{}/{}", l.level, l.evaluators)},
        {"user_pos", l.user_pos},
        {"user_neg", l.user_neg},
        {"excluded", l.excluded},
        {"confusion", {{"tp", c.tp}, {"fn", c.fn}, {"fp", c.fp}, {"tn", c.tn}}},
        {"accuracy", c.total() ? json(l.metrics.accuracy) : json(nullptr)},
        {"user_neg_metrics", ClassJson(l.metrics.non_interesting)},
        {"user_pos_metrics", ClassJson(l.metrics.interesting)},
    });
  }
  doc["levels"] = std::move(levels);
  if (report.kappa) {
    const auto& k = *report.kappa;
    json per_category = json::object();
    for (std::size_t j = 0; j < kNumVotes; ++j) {
      per_category[std::string(1, VoteLetter(static_cast<Vote>(j)))] =
          Optional(k.category_kappa[j]);
    }
    doc["kappa"] = {{"kappa", k.kappa},
                    {"p_bar", k.p_bar},
                    {"pe_bar", k.pe_bar},
                    {"per_category", per_category},
                    {"standard_error", k.standard_error},
                    {"ci95", {k.ci_low, k.ci_high}}};
  } else {
    doc["kappa"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace catmine::eval
