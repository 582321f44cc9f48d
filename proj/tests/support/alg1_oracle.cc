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


#include "support/alg1_oracle.h"

#include <algorithm>
#include <set>

#include "catmine/core/normalize.h"
#include "catmine/ingest/text.h"

namespace catmine::testing {

std::map<LabelKey, OracleLabel> BruteForceLabels(
    const std::vector<TableRecord>& corpus) {
  std::vector<const TableRecord*> tables;
  for (const auto& t : corpus) {
    if (!t.subject.empty()) tables.push_back(&t);
  }
  std::sort(tables.begin(), tables.end(),
            [](const TableRecord* a, const TableRecord* b) { return a->id < b->id; });

  struct Row {
    LabelKey key;
    std::string subject;
    OracleLabel label;
  };
  std::vector<Row> rows;
  for (const TableRecord* t : tables) {
    const std::string stem = ingest::StemPhrase(t->subject);
    for (const auto& column : t->columns) {
      if (column.kind != ColumnKind::kCategorical) continue;
      std::set<std::string> values;
      for (const auto& cell : column.cells) {
        std::string v = NormalizeValue(cell);
        if (!v.empty()) values.insert(std::move(v));
      }
      if (values.empty()) continue;  // no sample for an all-empty column
      Row row{{t->id, column.name}, t->subject, {}};
      for (const auto& v : values) {
        for (const TableRecord* u : tables) {
          if (u == t || ingest::StemPhrase(u->subject) != stem) continue;
          const auto& cons = u->metadata.constraints;
          if (std::find(cons.begin(), cons.end(), v) == cons.end()) continue;
          row.label = {Label::kInteresting, v + " -> " + u->id};
          break;
        }
        if (row.label.label == Label::kInteresting) break;
      }
      rows.push_back(std::move(row));
    }
  }

  std::map<std::pair<std::string, std::string>, std::string> first_witness;
  for (const auto& r : rows) {
    if (r.label.label == Label::kInteresting) {
      first_witness.try_emplace({r.subject, r.key.second}, *r.label.witness);
    }
  }
  std::map<LabelKey, OracleLabel> out;
  for (auto& r : rows) {
    const auto it = first_witness.find({r.subject, r.key.second});
    // Rows with a witness of their own keep it.
    if (it != first_witness.end() && r.label.label != Label::kInteresting) {
      r.label = {Label::kInteresting, it->second};
    }
    out[r.key] = r.label;
  }
  return out;
}

}  // namespace catmine::testing
