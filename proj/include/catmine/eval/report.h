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


#ifndef CATMINE_EVAL_REPORT_H_
#define CATMINE_EVAL_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catmine/core/sample.h"
#include "catmine/eval/agreement.h"
#include "catmine/eval/assessments.h"
#include "catmine/eval/kappa.h"
#include "catmine/eval/metrics.h"

namespace catmine::eval {

struct LevelReport {
  int level = 0;
  int evaluators = 0;
  std::size_t user_pos = 0;
  std::size_t user_neg = 0;
  std::size_t excluded = 0;
  ClassReport metrics;
};

struct EvaluationReport {
  std::vector<LevelReport> levels;  // highest agreement first
  std::optional<KappaResult> kappa;  // absent with fewer than two samples
  std::size_t assessed = 0;
  std::vector<std::string> unmatched_ids;  // assessed but never predicted
};

// Scores predictions (by sample id) against the ground truth of each level.
// Levels whose ground truth is empty are still listed, with no metrics.
EvaluationReport Evaluate(const std::map<std::string, Label>& predictions,
                          const AssessmentMatrix& assessments,
                          const std::vector<int>& levels);

// One row per level: userNeg recall/precision/F1, userPos recall/precision/F1,
// accuracy, all in percent; undefined values print as "n/a".
std::string RenderTable(const EvaluationReport& report);
std::string RenderJson(const EvaluationReport& report);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_REPORT_H_
