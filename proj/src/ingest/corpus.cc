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

#include "catmine/ingest/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"
#include "catmine/ingest/subject.h"
#include "catmine/ingest/title.h"
#include "catmine/ingest/wikitable.h"
#include "json.hpp"

namespace catmine::ingest {
namespace {

using nlohmann::json;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError(path.string() + ": read error");
  return buf.str();
}

std::string Where(std::string_view source, std::size_t index,
                  std::string_view field) {
  std::string out(source);
  out += ": table[" + std::to_string(index) + "]";
  if (!field.empty()) {
    out += ".";
    out += field;
  }
  return out;
}

std::vector<std::string> StringArray(const json& node, std::string_view source,
                                     std::size_t index,
                                     std::string_view field) {
  if (!node.is_array()) {
    throw DataError(Where(source, index, field) + ": expected array of strings");
  }
  std::vector<std::string> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) {
      throw DataError(Where(source, index, field) + "[" + std::to_string(i) +
                      "]: expected string");
    }
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

}  // namespace

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "json") return CorpusFormat::kJson;
  if (name == "wikitext") return CorpusFormat::kWikitext;
  return std::nullopt;
}

std::vector<RawTable> ParseCanonicalJson(std::string_view text,
                                         std::string_view source,
                                         std::vector<Warning>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string(source) + ": invalid JSON at byte " +
                    std::to_string(e.byte));
  }
  if (!doc.is_array()) {
    throw DataError(std::string(source) + ": expected a top-level array");
  }

  std::vector<RawTable> tables;
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& obj = doc[i];
    if (!obj.is_object()) {
      throw DataError(Where(source, i, "") + ": expected object");
    }
    auto require = [&](const char* key) -> const json& {
      const auto it = obj.find(key);
      if (it == obj.end()) {
        throw DataError(Where(source, i, key) + ": missing field");
      }
      return *it;
    };
    const json& id = require("id");
    const json& title = require("page_title");
    const json& sortable = require("sortable");
    if (!id.is_string()) throw DataError(Where(source, i, "id") + ": expected string");
    if (!title.is_string()) {
      throw DataError(Where(source, i, "page_title") + ": expected string");
    }
    if (!sortable.is_boolean()) {
      throw DataError(Where(source, i, "sortable") + ": expected bool");
    }

    RawTable table;
    table.id = id.get<std::string>();
    table.page_title = title.get<std::string>();
    table.sortable = sortable.get<bool>();
    if (const auto it = obj.find("caption"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) {
        throw DataError(Where(source, i, "caption") + ": expected string or null");
      }
      table.caption = it->get<std::string>();
    }
    table.headers = StringArray(require("headers"), source, i, "headers");
    const json& rows = require("rows");
    if (!rows.is_array()) {
      throw DataError(Where(source, i, "rows") + ": expected array of arrays");
    }
    bool ragged = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto row = StringArray(rows[r], source, i,
                             "rows[" + std::to_string(r) + "]");
      if (row.size() != table.headers.size()) ragged = true;
      table.rows.push_back(std::move(row));
    }
    if (!seen_ids.insert(table.id).second) {
      throw DataError(Where(source, i, "id") + ": duplicate table id '" +
                      table.id + "'");
    }
    if (ragged) {
      if (warnings) warnings->push_back({table.id, "ragged row"});
      continue;
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

std::string WriteCanonicalJson(std::vector<RawTable> tables) {
  std::sort(tables.begin(), tables.end(),
            [](const RawTable& a, const RawTable& b) { return a.id < b.id; });
  json doc = json::array();
  for (const auto& t : tables) {
    json obj;
    obj["id"] = t.id;
    obj["page_title"] = t.page_title;
    obj["caption"] = t.caption ? json(*t.caption) : json(nullptr);
    obj["sortable"] = t.sortable;
    obj["headers"] = t.headers;
    obj["rows"] = t.rows;
    doc.push_back(std::move(obj));
  }
  return doc.dump(1) + "\n";
}

std::vector<RawTable> ReadRawTables(const std::filesystem::path& path,
                                    CorpusFormat format,
                                    std::vector<Warning>* warnings) {
  const std::string text = ReadFile(path);
  if (format == CorpusFormat::kJson) {
    return ParseCanonicalJson(text, path.string(), warnings);
  }
  std::string default_title = path.stem().string();
  std::replace(default_title.begin(), default_title.end(), '_', ' ');
  std::vector<RawTable> tables;
  for (const auto& page : SplitWikiPages(text, default_title)) {
    auto found = ParseWikitables(page.text, page.title, warnings);
    for (auto& t : found) tables.push_back(std::move(t));
  }
  std::set<std::string> ids;
  for (const auto& t : tables) {
    if (!ids.insert(t.id).second) {
      throw DataError(path.string() + ": duplicate table id '" + t.id + "'");
    }
  }
  return tables;
}

std::optional<TableRecord> BuildRecord(const RawTable& raw,
                                       const UnitsDictionary& units,
                                       std::vector<Warning>* warnings) {
  auto warn = [&](std::string reason) {
    if (warnings) warnings->push_back({raw.id, std::move(reason)});
  };
  const auto title = ParseTitle(raw.page_title);
  if (!title) {
    warn("page title is not a list title");
    return std::nullopt;
  }
  if (raw.headers.empty() || raw.rows.empty()) {
    warn("no identifiable subject: table has no headers or rows");
    return std::nullopt;
  }
  const SubjectResolution resolution = ResolveSubject(raw, *title, units);
  const std::string subject = NormalizeValue(resolution.subject);
  if (subject.empty()) {
    warn("no identifiable subject");
    return std::nullopt;
  }

  TableRecord record;
  record.id = raw.id;
  record.subject = subject;
  for (std::size_t col = 0; col < raw.headers.size(); ++col) {
    Column column;
    column.header = raw.headers[col];
    column.name = NormalizeValue(raw.headers[col]);
    if (column.name.empty()) column.name = "column " + std::to_string(col + 1);
    column.cells = raw.ColumnCells(col);
    if (col == resolution.column) {
      column.kind = ColumnKind::kSubject;
      record.subject_col = record.columns.size();
    } else if (std::all_of(column.cells.begin(), column.cells.end(),
                           [](const std::string& c) { return Trim(c).empty(); })) {
      warn("empty column '" + column.header + "' dropped");
      continue;
    } else if (IsNumericColumn(column.cells, units)) {
      column.kind = ColumnKind::kNumeric;
    } else {
      column.kind = ColumnKind::kCategorical;
    }
    record.columns.push_back(std::move(column));
  }

  record.metadata.page_title = raw.page_title;
  record.metadata.caption = raw.caption;
  for (const auto& c : title->constraints) {
    std::string normalized = NormalizeValue(c);
    if (std::find(record.metadata.constraints.begin(),
                  record.metadata.constraints.end(),
                  normalized) == record.metadata.constraints.end()) {
      record.metadata.constraints.push_back(std::move(normalized));
    }
  }
  if (title->ranking_criterion) {
    record.metadata.ranking_criterion = NormalizeValue(*title->ranking_criterion);
  }
  return record;
}

std::vector<TableRecord> BuildRecords(const std::vector<RawTable>& raw,
                                      const UnitsDictionary& units,
                                      std::vector<Warning>* warnings) {
  std::vector<TableRecord> records;
  for (const auto& table : raw) {
    if (auto record = BuildRecord(table, units, warnings)) {
      records.push_back(std::move(*record));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const TableRecord& a, const TableRecord& b) { return a.id < b.id; });
  return records;
}

LoadedCorpus LoadCorpus(const std::filesystem::path& path, CorpusFormat format,
                        const UnitsDictionary& units) {
  LoadedCorpus corpus;
  const auto raw = ReadRawTables(path, format, &corpus.warnings);
  corpus.tables = BuildRecords(raw, units, &corpus.warnings);
  return corpus;
}

std::string WarningsToJsonLines(const std::vector<Warning>& warnings) {
  std::string out;
  for (const auto& w : warnings) {
    out += json{{"table_id", w.table_id}, {"reason", w.reason}}.dump();
    out += '\n';
  }
  return out;
}

}  // namespace catmine::ingest
