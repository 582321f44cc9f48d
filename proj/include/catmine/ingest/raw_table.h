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

#ifndef CATMINE_INGEST_RAW_TABLE_H_
#define CATMINE_INGEST_RAW_TABLE_H_

#include <optional>
#include <string>
#include <vector>

namespace catmine::ingest {

// A table as extracted from its source, before any interpretation. Every row
// has exactly headers.size() cells.
struct RawTable {
  std::string id;
  std::string page_title;
  std::optional<std::string> caption;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  bool sortable = false;

  std::vector<std::string> ColumnCells(std::size_t col) const {
    std::vector<std::string> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) cells.push_back(row[col]);
    return cells;
  }

  friend bool operator==(const RawTable&, const RawTable&) = default;
};

// Non-fatal problem with one table; serialized as one JSON object per line.
struct Warning {
  std::string table_id;
  std::string reason;

  friend bool operator==(const Warning&, const Warning&) = default;
};

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_RAW_TABLE_H_
