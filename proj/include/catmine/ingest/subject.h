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

#ifndef CATMINE_INGEST_SUBJECT_H_
#define CATMINE_INGEST_SUBJECT_H_

#include <cstddef>
#include <optional>
#include <string>

#include "catmine/ingest/numeric.h"
#include "catmine/ingest/raw_table.h"
#include "catmine/ingest/title.h"

namespace catmine::ingest {

struct SubjectResolution {
  std::size_t column = 0;
  // Normalized subject word: the title word that matched the header, or the
  // last content word of the subject phrase when no header matched.
  std::string subject;
  bool header_matched = false;
};

// Leftmost column that looks like a ranking column: a rank-like header
// ("Rank", "No.", "#", "Pos") over numeric cells, or integer cells that start
// at 1 and never decrease.
std::optional<std::size_t> FindRankColumn(const RawTable& raw,
                                          const UnitsDictionary& units);

// Picks the subject column. The first column whose stemmed header words
// share a stemmed content word with the subject phrase wins. Otherwise the
// column right of the ranking column (left of it when the ranking column is
// last), else column 0. raw must have at least one column.
SubjectResolution ResolveSubject(
    const RawTable& raw, const TitleMeta& meta,
    const UnitsDictionary& units = UnitsDictionary::Default());

inline std::size_t IdentifySubjectColumn(
    const RawTable& raw, const TitleMeta& meta,
    const UnitsDictionary& units = UnitsDictionary::Default()) {
  return ResolveSubject(raw, meta, units).column;
}

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_SUBJECT_H_
