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


#ifndef CATMINE_SVM_MODEL_H_
#define CATMINE_SVM_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "catmine/core/feature_vector.h"
#include "catmine/core/sample.h"
#include "catmine/svm/problem.h"

namespace catmine::svm {

// Trained classifier. Coefficients are on the scale where every alpha lies
// in [0, 1/n_train] and sum(alpha) = nu; decision values are
// sum(coef * K(sv, x)) + bias, and the margin sits at +-rho.
struct SvmModel {
  FeatureMask mask = FeatureMask::All();
  double nu = 0.0;
  double gamma = 0.0;
  double bias = 0.0;
  double rho = 0.0;
  std::vector<std::vector<double>> support_vectors;  // masked slots only
  std::vector<double> dual_coeffs;                    // alpha_i * y_i
  std::size_t n_train = 0;
  double objective = 0.0;
  std::int64_t iterations = 0;

  friend bool operator==(const SvmModel&, const SvmModel&) = default;
};

struct Prediction {
  Label label = Label::kNonInteresting;
  double decision_value = 0.0;
};

// `x` holds the masked slots only.
double DecisionValue(const SvmModel& model, std::span<const double> x);

// Throws DataError when `x` lacks one of the model's slots.
Prediction Predict(const SvmModel& model, const FeatureVector& x);

struct FeasibilityReport {
  double equality_residual = 0.0;  // |sum alpha_i y_i|
  double bound_violation = 0.0;    // largest excursion outside [0, 1/n]
  double alpha_sum = 0.0;
  bool ok = false;
};

FeasibilityReport CheckDualFeasibility(const SvmModel& model,
                                       double tolerance = 1e-8);

struct NuStats {
  double margin_error_fraction = 0.0;  // y f(x) < rho
  double support_vector_fraction = 0.0;
};

// Evaluated on the model's own training problem. `tolerance` widens the
// margin test to absorb the solver's stopping slack.
NuStats ComputeNuStats(const SvmModel& model, const Problem& train,
                       double tolerance = 1e-6);

}  // namespace catmine::svm

#endif  // CATMINE_SVM_MODEL_H_
