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


#include "catmine/svm/model.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/svm/kernel.h"

namespace catmine::svm {

double DecisionValue(const SvmModel& model, std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    sum += model.dual_coeffs[i] *
           RbfKernel(model.support_vectors[i], x, model.gamma);
  }
  return sum + model.bias;
}

Prediction Predict(const SvmModel& model, const FeatureVector& x) {
  if ((x.mask.bits() & model.mask.bits()) != model.mask.bits()) {
    throw DataError(fmt::format("feature vector lacks slots required by model "
                                "(has {}, needs {})",
                                x.mask.ToString(), model.mask.ToString()));
  }
  Prediction p;
  p.decision_value = DecisionValue(model, x.Selected(model.mask));
  p.label = p.decision_value > 0 ? Label::kInteresting : Label::kNonInteresting;
  return p;
}

FeasibilityReport CheckDualFeasibility(const SvmModel& model, double tolerance) {
  FeasibilityReport r;
  const double upper = 1.0 / static_cast<double>(std::max<std::size_t>(1, model.n_train));
  double signed_sum = 0.0;
  for (const double c : model.dual_coeffs) {
    signed_sum += c;
    const double a = std::abs(c);
    r.alpha_sum += a;
    r.bound_violation = std::max(r.bound_violation, a - upper);
  }
  r.equality_residual = std::abs(signed_sum);
  r.ok = r.equality_residual <= tolerance && r.bound_violation <= tolerance &&
         r.alpha_sum >= model.nu - tolerance;
  return r;
}

NuStats ComputeNuStats(const SvmModel& model, const Problem& train,
                       double tolerance) {
  NuStats s;
  if (train.size() == 0) return s;
  std::size_t errors = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    const double margin = train.y[i] * DecisionValue(model, train.x[i]);
    if (margin < model.rho - tolerance) ++errors;
  }
  const double n = static_cast<double>(train.size());
  s.margin_error_fraction = static_cast<double>(errors) / n;
  s.support_vector_fraction = static_cast<double>(model.support_vectors.size()) / n;
  return s;
}

}  // namespace catmine::svm
