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

#ifndef CATMINE_INGEST_NUMERIC_H_
#define CATMINE_INGEST_NUMERIC_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace catmine::ingest {

// Unit and currency tokens that may surround a number in a cell ("828m",
// "$12", "35 kg"). Tokens are stored lower-case, longest first.
class UnitsDictionary {
 public:
  UnitsDictionary() = default;
  explicit UnitsDictionary(std::vector<std::string> tokens);

  // Built-in list of common SI, imperial and currency units.
  static UnitsDictionary Default();

  // One token per line; blank lines and lines starting with '#' are skipped.
  // Throws DataError when the file cannot be read.
  static UnitsDictionary FromFile(const std::filesystem::path& path);
  static UnitsDictionary Parse(std::string_view text);

  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
};

// A cell is numeric when, after dropping footnote markers, unit tokens,
// thousands separators and range punctuation, every remaining part parses
// as a number.
bool IsNumericCell(std::string_view cell, const UnitsDictionary& units);

// True iff at least 80% of the non-empty cells are numeric. A column without
// non-empty cells is not numeric.
bool IsNumericColumn(std::span<const std::string> cells,
                     const UnitsDictionary& units);

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_NUMERIC_H_
