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

#include "catmine/ingest/title.h"

#include <algorithm>
#include <sstream>

#include "catmine/core/normalize.h"

namespace catmine::ingest {
namespace {

std::string StripParentheses(std::string_view text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) words.push_back(word);
  return words;
}

bool IsPreposition(std::string_view word) {
  const std::string lower = AsciiLower(word);
  return std::find(std::begin(kTitlePrepositions), std::end(kTitlePrepositions),
                   lower) != std::end(kTitlePrepositions);
}

bool IsArticle(std::string_view word) {
  const std::string lower = AsciiLower(word);
  return lower == "the" || lower == "a" || lower == "an";
}

std::string Join(const std::vector<std::string>& words, std::size_t begin,
                 std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace

std::optional<TitleMeta> ParseTitle(std::string_view title) {
  const auto words = SplitWords(StripParentheses(title));
  if (words.size() < 3 || AsciiLower(words[0]) != "list" ||
      AsciiLower(words[1]) != "of") {
    return std::nullopt;
  }

  // Segment boundaries: every preposition after "List of".
  struct Segment {
    std::string preposition;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Segment> segments = {{"of", 2, words.size()}};
  for (std::size_t i = 2; i < words.size(); ++i) {
    if (!IsPreposition(words[i])) continue;
    segments.back().end = i;
    segments.push_back({AsciiLower(words[i]), i + 1, words.size()});
  }

  TitleMeta meta;
  meta.subject_phrase = Join(words, segments[0].begin, segments[0].end);
  if (meta.subject_phrase.empty()) return std::nullopt;

  for (std::size_t s = 1; s < segments.size(); ++s) {
    std::size_t begin = segments[s].begin;
    while (begin < segments[s].end && IsArticle(words[begin])) ++begin;
    std::string constraint = Join(words, begin, segments[s].end);
    if (constraint.empty()) continue;
    if (segments[s].preposition == "by" && !meta.ranking_criterion) {
      meta.ranking_criterion = constraint;
    }
    meta.constraints.push_back(std::move(constraint));
  }
  return meta;
}

}  // namespace catmine::ingest
