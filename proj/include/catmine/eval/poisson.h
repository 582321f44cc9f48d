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


#ifndef CATMINE_EVAL_POISSON_H_
#define CATMINE_EVAL_POISSON_H_

#include <cstdint>
#include <map>
#include <span>

namespace catmine::eval {

double PoissonPmf(std::int64_t k, double lambda);

struct PoissonFit {
  double lambda = 0.0;
  // sum (emp(k) - pmf(k))^2 / sum emp(k)^2 over the observed values k.
  double relative_sse = 0.0;
  std::map<std::int64_t, std::int64_t> histogram;
};

// lambda is the sample mean. Throws DataError on empty input or a negative
// count.
PoissonFit FitPoisson(std::span<const std::int64_t> counts);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_POISSON_H_
