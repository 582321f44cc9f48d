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


#include "catmine/svm/problem.h"

#include <algorithm>

namespace catmine::svm {

std::size_t Problem::positives() const {
  return static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
}

Problem Problem::Subset(std::span<const std::size_t> indices) const {
  Problem out;
  out.mask = mask;
  out.x.reserve(indices.size());
  out.y.reserve(indices.size());
  for (const std::size_t i : indices) {
    out.x.push_back(x[i]);
    out.y.push_back(y[i]);
  }
  return out;
}

Problem MakeProblem(std::span<const Sample> samples, FeatureMask mask) {
  Problem p;
  p.mask = mask;
  p.x.reserve(samples.size());
  p.y.reserve(samples.size());
  for (const auto& s : samples) {
    p.x.push_back(s.features.Selected(mask));
    p.y.push_back(LabelSign(s.label));
  }
  return p;
}

Problem MakeProblem(const sampler::SampleSet& samples, FeatureMask mask) {
  const auto all = samples.All();
  return MakeProblem(std::span<const Sample>(all), mask);
}

}  // namespace catmine::svm
