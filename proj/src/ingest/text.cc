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

#include "catmine/ingest/text.h"

#include <algorithm>
#include <array>

namespace catmine::ingest {
namespace {

bool IsWordChar(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<std::string> WordTokens(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (IsWordChar(c)) {
      current.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32)
                                               : ch);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string StemWord(std::string_view word) {
  std::string w(word);
  if (w.size() <= 3) return w;
  if (EndsWith(w, "ies") && w.size() > 4) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "sses")) return w.substr(0, w.size() - 2);
  for (std::string_view suffix : {"ches", "shes", "xes"}) {
    if (EndsWith(w, suffix)) return w.substr(0, w.size() - 2);
  }
  if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) return w;
  if (EndsWith(w, "s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string StemPhrase(std::string_view phrase) {
  std::string out;
  for (const auto& word : WordTokens(phrase)) {
    if (!out.empty()) out += ' ';
    out += StemWord(word);
  }
  return out;
}

bool IsStopword(std::string_view word) {
  static constexpr std::array<std::string_view, 16> kStopwords = {
      "a",  "an", "and", "the", "of",  "in", "by", "at",
      "from", "for", "on", "to", "with", "or", "list", "de",
  };
  return std::find(kStopwords.begin(), kStopwords.end(), word) !=
         kStopwords.end();
}

}  // namespace catmine::ingest
