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


#ifndef CATMINE_SVM_SOLVER_H_
#define CATMINE_SVM_SOLVER_H_

#include <cstddef>
#include <cstdint>

#include "catmine/svm/model.h"
#include "catmine/svm/problem.h"

namespace catmine::svm {

struct TrainOptions {
  double eps = 1e-5;
  std::int64_t max_iterations = 10'000'000;
  std::size_t cache_bytes = std::size_t{64} << 20;
};

// Largest nu for which the dual is feasible: 2 min(n+, n-) / n.
double NuUpperBound(const Problem& problem);

// Trains a nu-SVM with an RBF kernel by pairwise (SMO-style) decomposition of
// the dual
//   min 1/2 sum_ij a_i a_j y_i y_j K_ij
//   s.t. 0 <= a_i <= 1/n, sum a_i y_i = 0, sum a_i = nu.
// Throws DataError for fewer than two samples, a missing class or nu out of
// (0, NuUpperBound]; ConvergenceError when the iteration cap is hit.
SvmModel TrainNuSvm(const Problem& problem, double nu, double gamma,
                    const TrainOptions& options = {});

}  // namespace catmine::svm

#endif  // CATMINE_SVM_SOLVER_H_
