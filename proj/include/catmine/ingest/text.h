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

#ifndef CATMINE_INGEST_TEXT_H_
#define CATMINE_INGEST_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace catmine::ingest {

// Lower-cased alphanumeric runs of `text`; everything else separates words.
std::vector<std::string> WordTokens(std::string_view text);

// Plural-stripping stemmer for a single lower-case word:
//   "cities" -> "city", "churches" -> "church", "buildings" -> "building".
// Words of three letters or fewer, and "-ss"/"-us"/"-is" endings, are kept.
std::string StemWord(std::string_view word);

// Stems every word token of `phrase` and joins them with single spaces.
std::string StemPhrase(std::string_view phrase);

// Function words never used for subject matching ("the", "and", ...).
bool IsStopword(std::string_view word);

}  // namespace catmine::ingest

#endif  // CATMINE_INGEST_TEXT_H_
