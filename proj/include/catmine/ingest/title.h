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

#ifndef CATMINE_INGEST_TITLE_H_
#define CATMINE_INGEST_TITLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmine::ingest {

struct TitleMeta {
  std::string subject_phrase;            // e.g. "Tallest Buildings"
  std::vector<std::string> constraints;  // e.g. {"United States"}
  // Phrase introduced by "by", if any ("List of countries by population").
  std::optional<std::string> ranking_criterion;

  friend bool operator==(const TitleMeta&, const TitleMeta&) = default;
};

// Words that split a list title into subject and constraints.
inline constexpr std::string_view kTitlePrepositions[] = {"of", "in", "by",
                                                          "at", "from"};

// Accepts titles of the form "List of <subject> [<prep> <constraint>]...".
//
// The subject is the text after the leading "List of" up to the next
// preposition; each later preposition starts a constraint. Leading articles
// are dropped from constraints and parenthesized remarks from the whole
// title. Returns nullopt when the title does not start with "List of" or the
// subject is empty. Original casing is preserved.
std::optional<TitleMeta> ParseTitle(std::string_view title);

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_TITLE_H_
