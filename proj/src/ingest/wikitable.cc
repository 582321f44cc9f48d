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

#include "catmine/ingest/wikitable.h"

#include <optional>
#include <sstream>

#include "catmine/core/normalize.h"

namespace catmine::ingest {
namespace {

std::size_t FindCaseInsensitive(std::string_view haystack,
                                std::string_view needle, std::size_t from) {
  const std::string h = AsciiLower(haystack);
  const std::string n = AsciiLower(needle);
  return h.find(n, from);
}

std::string RemoveRefs(std::string s) {
  std::size_t pos = 0;
  while ((pos = FindCaseInsensitive(s, "<ref", pos)) != std::string::npos) {
    const std::size_t close = s.find('>', pos);
    if (close == std::string::npos) {
      s.erase(pos);
      break;
    }
    if (close > 0 && s[close - 1] == '/') {
      s.erase(pos, close + 1 - pos);
      continue;
    }
    const std::size_t end = FindCaseInsensitive(s, "</ref>", close);
    if (end == std::string::npos) {
      s.erase(pos);
      break;
    }
    s.erase(pos, end + 6 - pos);
  }
  return s;
}

std::string RemoveTemplates(std::string_view s) {
  std::string out;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "{{") == 0) {
      ++depth;
      ++i;
    } else if (depth > 0 && s.compare(i, 2, "}}") == 0) {
      --depth;
      ++i;
    } else if (depth == 0) {
      out.push_back(s[i]);
    }
  }
  return out;
}

std::string ReduceLinks(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 2, "[[") == 0) {
      const std::size_t end = s.find("]]", i + 2);
      if (end == std::string_view::npos) {
        out.append(s.substr(i + 2));
        break;
      }
      const auto inner = s.substr(i + 2, end - i - 2);
      const auto bar = inner.rfind('|');
      out.append(bar == std::string_view::npos ? inner : inner.substr(bar + 1));
      i = end + 2;
    } else if (s[i] == '[') {
      const std::size_t end = s.find(']', i + 1);
      if (end == std::string_view::npos) {
        out.append(s.substr(i));
        break;
      }
      const auto inner = s.substr(i + 1, end - i - 1);
      if (inner.starts_with("http") || inner.starts_with("//")) {
        const auto space = inner.find(' ');
        if (space != std::string_view::npos) {
          out.append(inner.substr(space + 1));
        }
      } else {
        out.push_back('[');
        out.append(inner);
        out.push_back(']');
      }
      i = end + 1;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

std::string RemoveHtmlTags(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      const std::size_t end = s.find('>', i);
      if (end == std::string_view::npos) {
        out.append(s.substr(i));
        break;
      }
      out.push_back(' ');
      i = end + 1;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  return out;
}

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string CollapseSpaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : Trim(s)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = true;
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

// Splits on `sep` outside [[...]] and {{...}}.
std::vector<std::string> SplitTopLevel(std::string_view s,
                                       std::string_view sep) {
  std::vector<std::string> parts(1);
  int links = 0;
  int templates = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 2, "[[") == 0) {
      ++links;
    } else if (s.compare(i, 2, "]]") == 0 && links > 0) {
      --links;
    } else if (s.compare(i, 2, "{{") == 0) {
      ++templates;
    } else if (s.compare(i, 2, "}}") == 0 && templates > 0) {
      --templates;
    } else if (links == 0 && templates == 0 &&
               s.compare(i, sep.size(), sep) == 0) {
      parts.emplace_back();
      i += sep.size() - 1;
      continue;
    }
    parts.back().push_back(s[i]);
  }
  return parts;
}

// Drops a leading "attr=value |" from a cell.
std::string_view CellContent(std::string_view cell) {
  int links = 0;
  int templates = 0;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell.compare(i, 2, "[[") == 0) {
      ++links;
      ++i;
    } else if (cell.compare(i, 2, "]]") == 0 && links > 0) {
      --links;
      ++i;
    } else if (cell.compare(i, 2, "{{") == 0) {
      ++templates;
      ++i;
    } else if (cell.compare(i, 2, "}}") == 0 && templates > 0) {
      --templates;
      ++i;
    } else if (links == 0 && templates == 0 && cell[i] == '|') {
      return cell.substr(i + 1);
    }
  }
  return cell;
}

std::string ClassAttribute(std::string_view attrs) {
  const std::string lower = AsciiLower(attrs);
  const auto pos = lower.find("class");
  if (pos == std::string::npos) return {};
  auto eq = lower.find('=', pos);
  if (eq == std::string::npos) return {};
  std::size_t i = eq + 1;
  while (i < lower.size() && lower[i] == ' ') ++i;
  if (i < lower.size() && (lower[i] == '"' || lower[i] == '\'')) {
    const char quote = lower[i];
    const auto end = lower.find(quote, i + 1);
    return lower.substr(i + 1, end == std::string::npos ? std::string::npos
                                                        : end - i - 1);
  }
  const auto end = lower.find(' ', i);
  return lower.substr(i, end == std::string::npos ? std::string::npos : end - i);
}

struct RowBuffer {
  std::vector<std::string> cells;
  bool has_header_cell = false;
  bool has_data_cell = false;
};

struct BlockBuffer {
  std::string id;
  std::string cls;
  std::optional<std::string> caption;
  std::vector<RowBuffer> rows;
  bool nested = false;
};

void AddCells(BlockBuffer& block, std::string_view content, bool header) {
  if (block.rows.empty()) block.rows.emplace_back();
  RowBuffer& row = block.rows.back();
  const auto parts = header ? [&] {
    // Header lines may separate cells with "!!" or "||".
    std::vector<std::string> out;
    for (const auto& p : SplitTopLevel(content, "!!")) {
      for (auto& q : SplitTopLevel(p, "||")) out.push_back(std::move(q));
    }
    return out;
  }()
                            : SplitTopLevel(content, "||");
  for (const auto& part : parts) {
    row.cells.push_back(StripInlineMarkup(CellContent(part)));
  }
  (header ? row.has_header_cell : row.has_data_cell) = true;
}

void FinishBlock(BlockBuffer& block, std::string_view page_title,
                 std::vector<RawTable>& out, std::vector<Warning>* warnings) {
  auto warn = [&](std::string reason) {
    if (warnings) warnings->push_back({block.id, std::move(reason)});
  };
  if (block.nested) {
    warn("nested table");
    return;
  }
  std::vector<RowBuffer> rows;
  for (auto& r : block.rows) {
    if (!r.cells.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().has_data_cell) {
    warn("missing header row");
    return;
  }
  RawTable table;
  table.id = block.id;
  table.page_title = std::string(page_title);
  table.caption = block.caption;
  table.sortable = block.cls.find("sortable") != std::string::npos;
  table.headers = std::move(rows.front().cells);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].cells.size() != table.headers.size()) {
      warn("ragged row " + std::to_string(r) + ": " +
           std::to_string(rows[r].cells.size()) + " cells, expected " +
           std::to_string(table.headers.size()));
      return;
    }
    table.rows.push_back(std::move(rows[r].cells));
  }
  out.push_back(std::move(table));
}

}  // namespace

std::string StripInlineMarkup(std::string_view markup) {
  std::string s = RemoveRefs(std::string(markup));
  s = RemoveTemplates(s);
  s = ReduceLinks(s);
  s = RemoveHtmlTags(s);
  ReplaceAll(s, "'''", "");
  ReplaceAll(s, "''", "");
  ReplaceAll(s, "&nbsp;", " ");
  ReplaceAll(s, "&ndash;", "\xE2\x80\x93");
  ReplaceAll(s, "&amp;", "&");
  return CollapseSpaces(s);
}

std::vector<RawTable> ParseWikitables(std::string_view markup,
                                      std::string_view page_title,
                                      std::vector<Warning>* warnings) {
  std::vector<RawTable> tables;
  std::optional<BlockBuffer> block;
  int depth = 0;
  int ordinal = 0;
  bool in_wikitable = false;

  std::istringstream in{std::string(markup)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    const std::string_view line = Trim(raw_line);
    if (line.starts_with("{|")) {
      if (depth == 0) {
        block.emplace();
        block->cls = ClassAttribute(line.substr(2));
        in_wikitable = block->cls.find("wikitable") != std::string::npos;
        if (in_wikitable) {
          block->id = std::string(page_title) + "#" + std::to_string(++ordinal);
        }
      } else {
        block->nested = true;
      }
      ++depth;
      continue;
    }
    if (depth == 0) continue;
    if (line.starts_with("|}")) {
      if (--depth == 0) {
        if (in_wikitable) FinishBlock(*block, page_title, tables, warnings);
        block.reset();
      }
      continue;
    }
    if (depth > 1 || !in_wikitable) continue;

    if (line.starts_with("|+")) {
      block->caption = StripInlineMarkup(CellContent(line.substr(2)));
    } else if (line.starts_with("|-")) {
      block->rows.emplace_back();
    } else if (line.starts_with("!")) {
      AddCells(*block, line.substr(1), /*header=*/true);
    } else if (line.starts_with("|")) {
      AddCells(*block, line.substr(1), /*header=*/false);
    } else if (!line.empty() && !block->rows.empty() &&
               !block->rows.back().cells.empty()) {
      // Continuation of a multi-line cell.
      std::string& cell = block->rows.back().cells.back();
      cell = CollapseSpaces(cell + " " + StripInlineMarkup(line));
    }
  }
  if (depth > 0 && in_wikitable && warnings) {
    warnings->push_back({block->id, "unterminated table"});
  }
  return tables;
}

std::vector<WikiPage> SplitWikiPages(std::string_view text,
                                     std::string_view default_title) {
  std::vector<WikiPage> pages;
  pages.push_back({std::string(default_title), {}});
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto trimmed = Trim(line);
    const auto close = trimmed.find("</title>");
    if (trimmed.starts_with("<title>") && close != std::string_view::npos) {
      pages.push_back({std::string(Trim(trimmed.substr(7, close - 7))), {}});
      continue;
    }
    pages.back().text += line;
    pages.back().text += '\n';
  }
  if (Trim(pages.front().text).empty() && pages.size() > 1) {
    pages.erase(pages.begin());
  }
  return pages;
}

std::string SerializeWikitable(const RawTable& table) {
  std::string out = table.sortable ? "{| class=\"wikitable sortable\"\n"
                                   : "{| class=\"wikitable\"\n";
  if (table.caption) out += "|+ " + *table.caption + "\n";
  out += "|-\n!";
  for (std::size_t i = 0; i < table.headers.size(); ++i) {
    out += (i == 0 ? " " : " !! ") + table.headers[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    out += "|-\n|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i == 0 ? " " : " || ") + row[i];
    }
    out += "\n";
  }
  out += "|}\n";
  return out;
}

}  // namespace catmine::ingest
