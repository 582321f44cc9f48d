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


#ifndef CATMINE_SVM_COMBINATIONS_H_
#define CATMINE_SVM_COMBINATIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "catmine/sampler/sample_set.h"
#include "catmine/svm/grid_search.h"
#include "catmine/svm/model.h"

namespace catmine::svm {

enum class SelectionRule {
  kMaxThenSum,  // minimize max(errPos, errNeg), then errPos + errNeg
  kSumOnly,     // minimize errPos + errNeg, then the max
};

struct SubfileResult {
  std::size_t subfile = 0;
  GridResult grid;
  std::optional<SvmModel> model;  // absent when no grid cell was usable
  double err_pos = 1.0;
  double err_neg = 1.0;
  // Why model is absent: the error message, and whether it was the solver
  // giving up.
  std::string failure;
  bool no_convergence = false;
};

struct ComboResult {
  FeatureMask mask;
  std::vector<SubfileResult> subfiles;
  std::optional<std::size_t> best;  // index into subfiles
};

struct CombinationSearch {
  std::vector<ComboResult> combos;
  std::optional<std::size_t> final_combo;  // index into combos

  const SubfileResult* Final() const {
    if (!final_combo) return nullptr;
    const auto& c = combos[*final_combo];
    return c.best ? &c.subfiles[*c.best] : nullptr;
  }
};

struct CombinationOptions {
  GridSpec grid = DefaultGrid();
  GridOptions grid_options;  // grid_options.jobs parallelizes over tasks
  SelectionRule rule = SelectionRule::kMaxThenSum;
  std::vector<FeatureMask> masks;  // empty means all 127 combinations
};

std::vector<FeatureMask> AllMasks();

// For each mask and subfile: grid-search (nu, gamma), train on the whole
// subfile, and measure the error rates on the two held-out sets. The best
// subfile model of a mask, and the final mask, are chosen by `rule`; further
// ties go to the lower subfile index, then fewer features, then the smaller
// mask bits.
CombinationSearch SearchFeatureCombinations(
    const std::vector<sampler::SampleSet>& subfiles,
    const sampler::SampleSet& test_pos, const sampler::SampleSet& test_neg,
    const CombinationOptions& options);

// Every grid cell of every (mask, subfile), plus the held-out errors.
std::string CombinationReportCsv(const CombinationSearch& search);

}  // namespace catmine::svm

#endif  // CATMINE_SVM_COMBINATIONS_H_
