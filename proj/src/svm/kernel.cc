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


#include "catmine/svm/kernel.h"

#include <cmath>

#include <fmt/format.h>

#include "catmine/core/error.h"

namespace catmine::svm {

double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma) {
  if (a.size() != b.size()) {
    throw DataError(fmt::format("kernel dimension mismatch: {} vs {}", a.size(),
                                b.size()));
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

}  // namespace catmine::svm
