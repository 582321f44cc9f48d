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


#include "catmine/eval/poisson.h"

#include <cmath>

#include "catmine/core/error.h"

namespace catmine::eval {

double PoissonPmf(std::int64_t k, double lambda) {
  if (k < 0) return 0.0;
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(lambda) - lambda - std::lgamma(kd + 1.0));
}

PoissonFit FitPoisson(std::span<const std::int64_t> counts) {
  if (counts.empty()) throw DataError("poisson fit needs at least one count");
  PoissonFit fit;
  double sum = 0.0;
  for (const auto c : counts) {
    if (c < 0) throw DataError("poisson fit: negative count");
    sum += static_cast<double>(c);
    ++fit.histogram[c];
  }
  const double n = static_cast<double>(counts.size());
  fit.lambda = sum / n;
  double sse = 0.0, norm = 0.0;
  for (const auto& [k, freq] : fit.histogram) {
    const double emp = static_cast<double>(freq) / n;
    const double d = emp - PoissonPmf(k, fit.lambda);
    sse += d * d;
    norm += emp * emp;
  }
  fit.relative_sse = sse / norm;
  return fit;
}

}  // namespace catmine::eval
