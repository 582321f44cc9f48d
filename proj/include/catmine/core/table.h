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

#ifndef CATMINE_CORE_TABLE_H_
#define CATMINE_CORE_TABLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace catmine {

enum class ColumnKind { kSubject, kNumeric, kCategorical };

struct Column {
  std::string header;  // as written in the source
  std::string name;    // normalized header
  ColumnKind kind = ColumnKind::kCategorical;
  std::vector<std::string> cells;
};

struct TableMeta {
  std::vector<std::string> constraints;  // normalized, possibly empty
  std::optional<std::string> ranking_criterion;
  std::string page_title;
  std::optional<std::string> caption;
};

// A parsed table with its subject column identified and every other column
// classified as numeric or categorical.
struct TableRecord {
  std::string id;
  std::string subject;  // normalized entity class, e.g. "buildings"
  std::size_t subject_col = 0;
  std::vector<Column> columns;
  TableMeta metadata;

  std::vector<const Column*> Categorical() const {
    std::vector<const Column*> out;
    for (const auto& c : columns) {
      if (c.kind == ColumnKind::kCategorical) out.push_back(&c);
    }
    return out;
  }
};

}  // namespace catmine

#endif  // CATMINE_CORE_TABLE_H_
