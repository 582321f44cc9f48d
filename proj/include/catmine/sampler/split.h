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


#ifndef CATMINE_SAMPLER_SPLIT_H_
#define CATMINE_SAMPLER_SPLIT_H_

#include <cstdint>
#include <vector>

#include "catmine/sampler/sample_set.h"

namespace catmine::sampler {

struct HoldoutSplit {
  SampleSet train;
  SampleSet test_pos;  // interesting only
  SampleSet test_neg;  // non_interesting only
};

// Stratified split. Each class is shuffled independently (positives first,
// from one generator seeded with `seed`) and round(fraction * n) samples,
// clamped to [1, n - 1], are held out. Within every output the original
// relative order is kept.
HoldoutSplit MakeHoldoutSplit(const SampleSet& samples, double test_fraction,
                              std::uint64_t seed);

// Shuffles the negatives with `seed`, cuts them into k contiguous chunks whose
// sizes differ by at most one, and pairs each chunk with all positives.
std::vector<SampleSet> MakeBalancedSubfiles(const SampleSet& train, int k,
                                            std::uint64_t seed);

}  // namespace catmine::sampler

#endif  // CATMINE_SAMPLER_SPLIT_H_
