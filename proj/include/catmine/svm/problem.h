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


#ifndef CATMINE_SVM_PROBLEM_H_
#define CATMINE_SVM_PROBLEM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "catmine/core/feature_vector.h"
#include "catmine/core/sample.h"
#include "catmine/sampler/sample_set.h"

namespace catmine::svm {

// Dense training data: masked feature slots and labels +1 (interesting) /
// -1 (non_interesting).
struct Problem {
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  FeatureMask mask = FeatureMask::All();

  std::size_t size() const { return y.size(); }
  std::size_t positives() const;
  std::size_t negatives() const { return size() - positives(); }

  // Rows at `indices`, in that order.
  Problem Subset(std::span<const std::size_t> indices) const;
};

inline int LabelSign(Label label) {
  return label == Label::kInteresting ? 1 : -1;
}

Problem MakeProblem(std::span<const Sample> samples, FeatureMask mask);
Problem MakeProblem(const sampler::SampleSet& samples, FeatureMask mask);

}  // namespace catmine::svm

#endif  // CATMINE_SVM_PROBLEM_H_
