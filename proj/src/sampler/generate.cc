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


#include "catmine/sampler/generate.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"
#include "catmine/core/parallel.h"
#include "catmine/core/value_set.h"
#include "catmine/measures/measures.h"

namespace catmine::sampler {
namespace {

constexpr std::string_view kWitnessArrow = " -> ";

struct TableOutput {
  std::vector<Sample> samples;
  std::vector<ingest::Warning> warnings;
};

TableOutput LabelTable(const TableRecord& table, const ConsMap& cons_map) {
  TableOutput out;
  if (table.subject.empty()) {
    out.warnings.push_back({table.id, "no identifiable subject"});
    return out;
  }
  const std::string key = SubjectKey(table.subject);
  for (const Column* column : table.Categorical()) {
    std::optional<ValueSet> values;
    try {
      values = ValueSet::FromColumn(column->cells);
    } catch (const DataError&) {
      out.warnings.push_back(
          {table.id, fmt::format("column '{}' has no values", column->header)});
      continue;
    }
    Sample sample;
    sample.table_id = table.id;
    sample.subject = table.subject;
    sample.attribute = column->name;
    sample.features = measures::ComputeFeatures(*values);
    for (const auto& entry : values->entries()) {
      const auto* children = cons_map.Tables(entry.value, key);
      if (children == nullptr) continue;
      const auto child = std::find_if(
          children->begin(), children->end(),
          [&](const std::string& id) { return id != table.id; });
      if (child == children->end()) continue;
      sample.label = Label::kInteresting;
      sample.witness = entry.value + std::string(kWitnessArrow) + *child;
      break;
    }
    out.samples.push_back(std::move(sample));
  }
  return out;
}

std::uint64_t Fnv1a(std::uint64_t hash, std::string_view bytes) {
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  // Field separator so that ("ab","c") and ("a","bc") differ.
  hash ^= 0x1f;
  hash *= 0x100000001b3ull;
  return hash;
}

}  // namespace

SampleSet GenerateSamples(const std::vector<TableRecord>& corpus,
                          const ConsMap& cons_map,
                          const GenerateOptions& options,
                          std::vector<ingest::Warning>* warnings) {
  std::vector<const TableRecord*> tables;
  tables.reserve(corpus.size());
  for (const auto& t : corpus) tables.push_back(&t);
  std::stable_sort(tables.begin(), tables.end(),
                   [](const TableRecord* a, const TableRecord* b) {
                     return a->id < b->id;
                   });

  std::vector<TableOutput> outputs(tables.size());
  ParallelFor(tables.size(), options.jobs, [&](std::size_t i) {
    outputs[i] = LabelTable(*tables[i], cons_map);
  });

  std::vector<Sample> all;
  for (auto& out : outputs) {
    if (warnings) {
      warnings->insert(warnings->end(), out.warnings.begin(), out.warnings.end());
    }
    for (auto& s : out.samples) all.push_back(std::move(s));
  }

  std::map<std::pair<std::string, std::string>, std::string> witnesses;
  for (const auto& s : all) {
    if (s.label == Label::kInteresting) {
      witnesses.try_emplace({s.subject, s.attribute}, *s.witness);
    }
  }
  for (auto& s : all) {
    if (s.label == Label::kInteresting) continue;
    const auto it = witnesses.find({s.subject, s.attribute});
    if (it == witnesses.end()) continue;
    s.label = Label::kInteresting;
    s.witness = it->second;
  }

  SampleSet result;
  std::set<std::pair<std::string, std::string>> seen;
  for (auto& s : all) {
    if (options.dedup_keep_first && !seen.insert({s.subject, s.attribute}).second) {
      continue;
    }
    result.Add(std::move(s));
  }
  result.provenance.corpus_hash = CorpusHash(corpus);
  return result;
}

SampleSet GenerateSamples(const std::vector<TableRecord>& corpus,
                          const GenerateOptions& options,
                          std::vector<ingest::Warning>* warnings) {
  return GenerateSamples(corpus, ConsMap::Build(corpus), options, warnings);
}

std::string CorpusHash(const std::vector<TableRecord>& corpus) {
  std::vector<const TableRecord*> tables;
  for (const auto& t : corpus) tables.push_back(&t);
  std::stable_sort(tables.begin(), tables.end(),
                   [](const TableRecord* a, const TableRecord* b) {
                     return a->id < b->id;
                   });
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const TableRecord* t : tables) {
    hash = Fnv1a(hash, t->id);
    hash = Fnv1a(hash, t->subject);
    for (const auto& c : t->metadata.constraints) hash = Fnv1a(hash, c);
    for (const auto& column : t->columns) {
      hash = Fnv1a(hash, column.name);
      hash = Fnv1a(hash, std::string(1, static_cast<char>(column.kind)));
      for (const auto& cell : column.cells) hash = Fnv1a(hash, cell);
    }
  }
  return fmt::format("{:016x}", hash);
}

bool CheckWitness(const Sample& sample, const std::vector<TableRecord>& corpus) {
  if (sample.label != Label::kInteresting || !sample.witness) return false;
  const std::string& witness = *sample.witness;
  const auto arrow = witness.rfind(kWitnessArrow);
  if (arrow == std::string::npos) return false;
  const std::string value = witness.substr(0, arrow);
  const std::string child_id = witness.substr(arrow + kWitnessArrow.size());
  const std::string key = SubjectKey(sample.subject);

  const auto child = std::find_if(corpus.begin(), corpus.end(),
                                  [&](const TableRecord& t) { return t.id == child_id; });
  if (child == corpus.end() || SubjectKey(child->subject) != key) return false;
  const auto& cons = child->metadata.constraints;
  if (std::find(cons.begin(), cons.end(), value) == cons.end()) return false;

  for (const auto& t : corpus) {
    if (t.id == child_id || SubjectKey(t.subject) != key) continue;
    for (const Column* column : t.Categorical()) {
      if (column->name != sample.attribute) continue;
      for (const auto& cell : column->cells) {
        if (NormalizeValue(cell) == value) return true;
      }
    }
  }
  return false;
}

}  // namespace catmine::sampler
