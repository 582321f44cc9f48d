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


#ifndef CATMINE_SAMPLER_GENERATE_H_
#define CATMINE_SAMPLER_GENERATE_H_

#include <string>
#include <vector>

#include "catmine/core/table.h"
#include "catmine/ingest/raw_table.h"
#include "catmine/sampler/cons_map.h"
#include "catmine/sampler/sample_set.h"

namespace catmine::sampler {

struct GenerateOptions {
  // Keep only the first (by table id) occurrence of each (subject, attribute)
  // pair. Off by default: every table contributes its own sample.
  bool dedup_keep_first = false;
  int jobs = 1;
};

// Labels every categorical column of every table.
//
// A column is interesting when one of its values is the constraint of some
// other table about the same subject (stemmed comparison). Values are tried
// in sorted order; the witness is the first hit together with the smallest
// matching table id. When one (subject, attribute) pair is interesting in
// some table, its occurrences in other tables are labeled interesting too,
// sharing that witness, so a pair never carries both labels.
//
// Output order is by table id, then column position, regardless of the
// order of `corpus`. Tables without a subject are skipped with a warning.
SampleSet GenerateSamples(const std::vector<TableRecord>& corpus,
                          const ConsMap& cons_map,
                          const GenerateOptions& options,
                          std::vector<ingest::Warning>* warnings);

SampleSet GenerateSamples(const std::vector<TableRecord>& corpus,
                          const GenerateOptions& options = {},
                          std::vector<ingest::Warning>* warnings = nullptr);

// FNV-1a over the table contents in id order, as 16 hex digits.
std::string CorpusHash(const std::vector<TableRecord>& corpus);

// Re-checks an interesting sample's witness against the corpus: the named
// child table exists, has the value as a constraint and the same subject
// key, and some other table with that subject key lists the value in the
// sample's attribute.
bool CheckWitness(const Sample& sample, const std::vector<TableRecord>& corpus);

}  // namespace catmine::sampler

#endif  // CATMINE_SAMPLER_GENERATE_H_
