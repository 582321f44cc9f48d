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


#ifndef CATMINE_EVAL_KAPPA_H_
#define CATMINE_EVAL_KAPPA_H_

#include <array>
#include <optional>
#include <vector>

#include "catmine/eval/assessments.h"

namespace catmine::eval {

struct KappaResult {
  double kappa = 0.0;
  double p_bar = 0.0;     // mean observed agreement
  double pe_bar = 0.0;    // chance agreement
  std::array<double, kNumVotes> proportions{};
  // Category-wise kappa; absent for categories never or always chosen.
  std::array<std::optional<double>, kNumVotes> category_kappa{};
  // Large-sample standard error under the null hypothesis and the matching
  // 95% interval around kappa.
  double standard_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// Fleiss' kappa over per-item category counts; every item must have the same
// rater total. Needs at least two items and two raters. When chance agreement
// is 1 (all votes in one category) kappa is 1.
KappaResult FleissKappa(const std::vector<std::array<int, kNumVotes>>& counts);
KappaResult FleissKappa(const AssessmentMatrix& m);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_KAPPA_H_
