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


#ifndef CATMINE_SVM_GRID_SEARCH_H_
#define CATMINE_SVM_GRID_SEARCH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catmine/svm/problem.h"
#include "catmine/svm/solver.h"

namespace catmine::svm {

struct GridSpec {
  std::vector<double> nu_values;
  std::vector<double> gamma_values;
  int folds = 5;
  // Adds one finer pass around the best coarse cell: nu +- 0.025 and
  // gamma * 10^(+-0.5).
  bool refine = false;
};

// nu in {0.05, ..., 0.75}, gamma in {1e-5, ..., 1e2}, 5 folds, refined.
GridSpec DefaultGrid();

// "default" or "nu=0.1,0.3;gamma=0.01,1[;folds=5][;refine]".
GridSpec ParseGridSpec(std::string_view text);

enum class CellStatus { kOk, kInfeasible, kNoConvergence };
std::string_view CellStatusName(CellStatus status);

struct CvCell {
  double nu = 0.0;
  double gamma = 0.0;
  CellStatus status = CellStatus::kOk;
  std::vector<double> fold_accuracies;
  double pos_accuracy = 0.0;
  double neg_accuracy = 0.0;
  double balanced_accuracy = 0.0;  // mean of the two class accuracies
};

struct GridResult {
  double best_nu = 0.0;
  double best_gamma = 0.0;
  double best_score = 0.0;
  std::vector<CvCell> cells;  // coarse cells first, then refinement cells
};

struct GridOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  TrainOptions train;
};

// Fold index per sample. Each class is shuffled on its own and dealt
// round-robin, so fold class counts differ by at most one.
std::vector<int> StratifiedFolds(const std::vector<int>& y, int folds,
                                 std::uint64_t seed);

// Stratified k-fold cross-validation of every grid cell, scored by balanced
// accuracy over the pooled held-out predictions. Ties go to the smaller nu,
// then the smaller gamma. Cells whose nu is infeasible on some training fold,
// or whose training fails to converge, are kept in the table with their
// status and never selected.
GridResult GridSearchCv(const Problem& problem, const GridSpec& grid,
                        const GridOptions& options = {});

// (mask, nu, gamma, status, per-fold accuracies, class accuracies) as CSV.
std::string CvTableCsv(const GridResult& result, FeatureMask mask,
                       std::string_view prefix_header = {},
                       std::string_view prefix = {});

}  // namespace catmine::svm

#endif  // CATMINE_SVM_GRID_SEARCH_H_
