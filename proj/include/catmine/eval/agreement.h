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


#ifndef CATMINE_EVAL_AGREEMENT_H_
#define CATMINE_EVAL_AGREEMENT_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "catmine/eval/assessments.h"

namespace catmine::eval {

// Row indices of an assessment matrix split by an x-of-y agreement rule.
struct GroundTruth {
  int level = 0;
  std::vector<std::size_t> user_pos;
  std::vector<std::size_t> user_neg;
  std::vector<std::size_t> excluded;  // no choice reached x, or "not sure" won
};

// Throws UsageError unless evaluators / 2 < x <= evaluators.
GroundTruth MajorityGroundTruth(const AssessmentMatrix& m, int x);

// Every strict-majority level: floor(y/2) + 1 through y.
std::vector<int> DefaultAgreementLevels(int evaluators);

// "5..9" or "5,6,9".
std::vector<int> ParseLevels(std::string_view text);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_AGREEMENT_H_
