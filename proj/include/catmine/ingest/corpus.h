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

#ifndef CATMINE_INGEST_CORPUS_H_
#define CATMINE_INGEST_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmine/core/table.h"
#include "catmine/ingest/numeric.h"
#include "catmine/ingest/raw_table.h"

namespace catmine::ingest {

enum class CorpusFormat { kJson, kWikitext };

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);

// Canonical corpus: a JSON array of
//   {"id": str, "page_title": str, "caption": str|null, "sortable": bool,
//    "headers": [str], "rows": [[str]]}
// Schema violations throw DataError naming the offending element. Tables
// with rows of the wrong width are skipped with a warning; duplicate ids are
// an error. `source` only labels error messages.
std::vector<RawTable> ParseCanonicalJson(std::string_view text,
                                         std::string_view source,
                                         std::vector<Warning>* warnings);

// Serializes tables (sorted by id) as a canonical corpus document.
std::string WriteCanonicalJson(std::vector<RawTable> tables);

// Reads raw tables from a file in the given format. For wikitext, pages are
// delimited by "<title>...</title>" lines; without any, the file name stem
// (underscores as spaces) is the page title.
std::vector<RawTable> ReadRawTables(const std::filesystem::path& path,
                                    CorpusFormat format,
                                    std::vector<Warning>* warnings);

// Interprets one raw table: parses the page title, identifies the subject
// column and splits the other columns into numeric and categorical. Returns
// nullopt (with a warning) for non-list titles, tables without headers or
// rows, and tables whose subject cannot be determined. Columns without any
// non-empty cell are dropped with a warning.
std::optional<TableRecord> BuildRecord(const RawTable& raw,
                                       const UnitsDictionary& units,
                                       std::vector<Warning>* warnings);

// BuildRecord over many tables, result sorted by id.
std::vector<TableRecord> BuildRecords(const std::vector<RawTable>& raw,
                                      const UnitsDictionary& units,
                                      std::vector<Warning>* warnings);

struct LoadedCorpus {
  std::vector<TableRecord> tables;
  std::vector<Warning> warnings;
};

LoadedCorpus LoadCorpus(
    const std::filesystem::path& path, CorpusFormat format,
    const UnitsDictionary& units = UnitsDictionary::Default());

// One {"table_id": ..., "reason": ...} object per line.
std::string WarningsToJsonLines(const std::vector<Warning>& warnings);

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_CORPUS_H_
