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


#ifndef CATMINE_SAMPLER_SAMPLE_SET_H_
#define CATMINE_SAMPLER_SAMPLE_SET_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catmine/core/sample.h"

namespace catmine::sampler {

struct Provenance {
  std::string corpus_hash;  // 16 hex digits, empty when unknown
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SampleSet {
  std::vector<Sample> interesting;
  std::vector<Sample> non_interesting;
  Provenance provenance;

  std::size_t size() const {
    return interesting.size() + non_interesting.size();
  }

  // Positives first, then negatives.
  std::vector<Sample> All() const {
    std::vector<Sample> out = interesting;
    out.insert(out.end(), non_interesting.begin(), non_interesting.end());
    return out;
  }

  void Add(Sample sample) {
    (sample.label == Label::kInteresting ? interesting : non_interesting)
        .push_back(std::move(sample));
  }

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

}  // namespace catmine::sampler

#endif  // CATMINE_SAMPLER_SAMPLE_SET_H_
