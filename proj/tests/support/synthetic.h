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


#ifndef CATMINE_TESTS_SUPPORT_SYNTHETIC_H_
#define CATMINE_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "catmine/core/rng.h"
#include "catmine/core/sample.h"
#include "catmine/svm/problem.h"
#include "support/alg1_oracle.h"

namespace catmine::testing {

std::string DataPath(std::string_view name);

// tests/data/synthetic_labels.tsv: table id, attribute, label.
std::map<LabelKey, Label> ReadExpectedLabels(const std::string& path);

// Uniform points in [0,1]^dim with random labels; both classes present.
svm::Problem RandomProblem(Rng& rng, std::size_t n, std::size_t dim);

// Positives in [0, 0.3]^dim, negatives in [0.7, 1]^dim, alternating labels.
svm::Problem SeparableProblem(Rng& rng, std::size_t n, std::size_t dim);

// Knuth's multiplication method.
std::int64_t SamplePoisson(Rng& rng, double lambda);

}  // namespace catmine::testing

#endif  // CATMINE_TESTS_SUPPORT_SYNTHETIC_H_
