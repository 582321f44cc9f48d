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


#ifndef CATMINE_TESTS_SUPPORT_QP_ORACLE_H_
#define CATMINE_TESTS_SUPPORT_QP_ORACLE_H_

#include <vector>

#include "catmine/svm/problem.h"

namespace catmine::testing {

struct QpOracleResult {
  bool found = false;
  double objective = 0.0;
  std::vector<double> alpha;
};

// Exact optimum of
//   min 1/2 a'Qa  s.t.  0 <= a_i <= 1/n, sum a_i y_i = 0, sum a_i >= nu
// found by enumerating every active set (each a_i at 0, at 1/n or free;
// the sum constraint active or not), solving the KKT equations of each and
// keeping the best feasible point. Exponential; meant for n <= 6.
QpOracleResult BruteForceNuDual(const svm::Problem& problem, double nu,
                                double gamma);

}  // namespace catmine::testing

#endif  // CATMINE_TESTS_SUPPORT_QP_ORACLE_H_
