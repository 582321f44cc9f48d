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

#include "catmine/ingest/subject.h"

#include <algorithm>
#include <charconv>

#include "catmine/core/normalize.h"
#include "catmine/ingest/text.h"

namespace catmine::ingest {
namespace {

bool IsRankHeader(std::string_view header) {
  const std::string h = NormalizeValue(header);
  return h == "rank" || h == "#" || h == "no." || h == "no" || h == "pos" ||
         h == "pos." || h == "position" || h == "rk" || h == "ranking";
}

std::optional<long> ParseInteger(std::string_view cell) {
  cell = Trim(cell);
  // Tied ranks are often written "=3".
  if (!cell.empty() && cell.front() == '=') cell.remove_prefix(1);
  long value = 0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    return std::nullopt;
  }
  return value;
}

bool IsRankSequence(const RawTable& raw, std::size_t col) {
  long previous = 0;
  bool first = true;
  for (const auto& row : raw.rows) {
    const auto value = ParseInteger(row[col]);
    if (!value) return false;
    if (first ? *value != 1 : *value < previous) return false;
    previous = *value;
    first = false;
  }
  return !first;
}

struct SubjectWord {
  std::string word;
  std::string stem;
};

std::vector<SubjectWord> ContentWords(std::string_view phrase) {
  std::vector<SubjectWord> out;
  for (auto& w : WordTokens(phrase)) {
    if (IsStopword(w)) continue;
    std::string stem = StemWord(w);
    out.push_back({std::move(w), std::move(stem)});
  }
  return out;
}

}  // namespace

std::optional<std::size_t> FindRankColumn(const RawTable& raw,
                                          const UnitsDictionary& units) {
  for (std::size_t col = 0; col < raw.headers.size(); ++col) {
    if (IsRankSequence(raw, col)) return col;
    if (IsRankHeader(raw.headers[col]) &&
        IsNumericColumn(raw.ColumnCells(col), units)) {
      return col;
    }
  }
  return std::nullopt;
}

SubjectResolution ResolveSubject(const RawTable& raw, const TitleMeta& meta,
                                 const UnitsDictionary& units) {
  const auto words = ContentWords(meta.subject_phrase);

  for (std::size_t col = 0; col < raw.headers.size(); ++col) {
    std::vector<std::string> header_stems;
    for (const auto& w : WordTokens(raw.headers[col])) {
      if (!IsStopword(w)) header_stems.push_back(StemWord(w));
    }
    // Prefer the last matching word: English noun phrases are head-final.
    for (auto it = words.rbegin(); it != words.rend(); ++it) {
      if (std::find(header_stems.begin(), header_stems.end(), it->stem) !=
          header_stems.end()) {
        return {col, it->word, true};
      }
    }
  }

  SubjectResolution fallback;
  fallback.subject = words.empty() ? NormalizeValue(meta.subject_phrase)
                                   : words.back().word;
  if (const auto rank = FindRankColumn(raw, units)) {
    if (*rank + 1 < raw.headers.size()) {
      fallback.column = *rank + 1;
    } else if (*rank > 0) {
      fallback.column = *rank - 1;
    }
  }
  return fallback;
}

}  // namespace catmine::ingest
