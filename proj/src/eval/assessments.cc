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


#include "catmine/eval/assessments.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"

namespace catmine::eval {
namespace {

// Splits one CSV record, honoring double-quoted fields with "" escapes.
std::vector<std::string> SplitCsvLine(std::string_view line, std::string_view where) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw DataError(fmt::format("{}: unterminated quote", where));
  for (auto& f : fields) f = std::string(Trim(f));
  return fields;
}

}  // namespace

std::optional<Vote> ParseVote(std::string_view text) {
  const std::string v = AsciiLower(Trim(text));
  if (v == "i" || v == "interesting") return Vote::kInteresting;
  if (v == "n" || v == "non_interesting" || v == "non-interesting") {
    return Vote::kNonInteresting;
  }
  if (v == "u" || v == "not_sure" || v == "not sure") return Vote::kNotSure;
  return std::nullopt;
}

char VoteLetter(Vote vote) {
  switch (vote) {
    case Vote::kInteresting:
      return 'I';
    case Vote::kNonInteresting:
      return 'N';
    case Vote::kNotSure:
      return 'U';
  }
  return '?';
}

std::array<int, kNumVotes> AssessmentMatrix::Counts(std::size_t row) const {
  std::array<int, kNumVotes> counts{};
  for (const Vote v : votes[row]) ++counts[static_cast<std::size_t>(v)];
  return counts;
}

AssessmentMatrix ParseAssessmentsCsv(std::string_view text,
                                     std::string_view source) {
  AssessmentMatrix m;
  std::size_t line_no = 0, pos = 0;
  std::optional<std::size_t> id_col;
  std::size_t width = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    const std::string where = fmt::format("{}:{}", source, line_no);
    auto fields = SplitCsvLine(line, where);
    if (!id_col) {
      width = fields.size();
      id_col = 0;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (AsciiLower(fields[i]) == "id") id_col = i;
      }
      if (width < 2) throw DataError(where + ": need an id column and evaluators");
      continue;
    }
    if (fields.size() != width) {
      throw DataError(fmt::format("{}: expected {} fields, found {}", where,
                                  width, fields.size()));
    }
    std::vector<Vote> row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i == *id_col) continue;
      const auto vote = ParseVote(fields[i]);
      if (!vote) {
        throw DataError(fmt::format("{}: bad vote '{}' in column {}", where,
                                    fields[i], i + 1));
      }
      row.push_back(*vote);
    }
    if (fields[*id_col].empty()) throw DataError(where + ": empty sample id");
    m.ids.push_back(fields[*id_col]);
    m.votes.push_back(std::move(row));
  }
  if (!id_col) throw DataError(std::string(source) + ": empty assessment file");
  return m;
}

AssessmentMatrix ReadAssessmentsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseAssessmentsCsv(buf.str(), path.string());
}

}  // namespace catmine::eval
