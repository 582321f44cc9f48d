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


#ifndef CATMINE_SAMPLER_SAMPLE_IO_H_
#define CATMINE_SAMPLER_SAMPLE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "catmine/core/feature_vector.h"
#include "catmine/sampler/sample_set.h"

// Sample files are JSON lines. An optional first line
//   {"provenance": {"corpus_hash": str, "seed": int|null}}
// is followed by one object per sample:
//   {"table_id": str, "subject": str, "attribute": str, "label": str,
//    "features": [7 reals], "degenerate": int, "witness": str|null}
// Positives are written before negatives.
namespace catmine::sampler {

std::string WriteSamplesJsonl(const SampleSet& samples);
SampleSet ParseSamplesJsonl(std::string_view text, std::string_view source);

SampleSet ReadSamplesFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

// "<+1|-1> i:v ..." with 1-based slot indices, masked slots only.
std::string WriteSparse(const SampleSet& samples,
                        FeatureMask mask = FeatureMask::All());

}  // namespace catmine::sampler

#endif  // CATMINE_SAMPLER_SAMPLE_IO_H_
