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

#include "catmine/ingest/numeric.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"

namespace catmine::ingest {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string DropFootnotes(std::string_view text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

// Splits a cleaned cell at range separators ('|' placeholders and hyphens
// that follow a digit).
std::vector<std::string> SplitRange(std::string_view text) {
  std::vector<std::string> parts(1);
  for (char c : text) {
    const std::string& cur = parts.back();
    const bool after_number =
        std::any_of(cur.begin(), cur.end(), [](char ch) { return IsDigit(ch); });
    if (c == '|' || (c == '-' && after_number)) {
      parts.emplace_back();
    } else {
      parts.back().push_back(c);
    }
  }
  return parts;
}

std::string StripUnits(std::string_view part, const UnitsDictionary& units) {
  std::string s(Trim(part));
  bool changed = true;
  while (changed && !s.empty()) {
    changed = false;
    for (const auto& unit : units.tokens()) {
      if (s.size() > unit.size() && s.ends_with(unit)) {
        const char before = s[s.size() - unit.size() - 1];
        if (IsDigit(before) || before == ' ' || before == '.') {
          s = std::string(Trim(s.substr(0, s.size() - unit.size())));
          changed = true;
          break;
        }
      }
      if (s.size() > unit.size() && s.starts_with(unit)) {
        const char after = s[unit.size()];
        if (IsDigit(after) || after == ' ' || after == '.' || after == '-') {
          s = std::string(Trim(s.substr(unit.size())));
          changed = true;
          break;
        }
      }
    }
  }
  return s;
}

bool ParsesAsNumber(std::string_view s) {
  std::string digits;
  digits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Thousands separators sit between digits.
    if (s[i] == ',' && i > 0 && i + 1 < s.size() && IsDigit(s[i - 1]) &&
        IsDigit(s[i + 1])) {
      continue;
    }
    digits.push_back(s[i]);
  }
  std::string_view v = Trim(digits);
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  if (v.empty() || !std::any_of(v.begin(), v.end(), IsDigit)) return false;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  return ec == std::errc() && ptr == v.data() + v.size();
}

}  // namespace

UnitsDictionary::UnitsDictionary(std::vector<std::string> tokens) {
  for (auto& t : tokens) {
    std::string lower = AsciiLower(Trim(t));
    if (!lower.empty()) tokens_.push_back(std::move(lower));
  }
  std::sort(tokens_.begin(), tokens_.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
}

UnitsDictionary UnitsDictionary::Default() {
  return UnitsDictionary({
      "kg",   "g",    "t",    "lb",   "lbs",  "oz",  "st",   "m",    "km",
      "cm",   "mm",   "ft",   "in",   "mi",   "yd",  "nmi",  "m2",   "m²",
      "km2",  "km²",  "sq mi", "sq ft", "ha",  "acres", "l",   "ml",   "gal",
      "mph",  "km/h", "kmh",  "kn",   "s",    "min", "h",    "hrs",  "yr",
      "years", "%",   "°c",   "°f",   "k",    "mw",  "kw",   "gw",   "hp",
      "$",    "us$",  "€",    "£",    "¥",    "usd", "eur",  "gbp",  "million",
      "billion", "bn", "mn",
  });
}

UnitsDictionary UnitsDictionary::Parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    tokens.emplace_back(trimmed);
  }
  return UnitsDictionary(std::move(tokens));
}

UnitsDictionary UnitsDictionary::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot read units dictionary");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

bool IsNumericCell(std::string_view cell, const UnitsDictionary& units) {
  std::string s = AsciiLower(DropFootnotes(cell));
  ReplaceAll(s, "\xE2\x80\x93", "|");  // en dash
  ReplaceAll(s, "\xE2\x80\x94", "|");  // em dash
  ReplaceAll(s, "\xE2\x88\x92", "-");  // minus sign
  ReplaceAll(s, "\xE2\x89\x88", "");   // approx
  ReplaceAll(s, "\xE2\x80\xA0", "");   // dagger
  ReplaceAll(s, "\xE2\x80\xA1", "");   // double dagger
  ReplaceAll(s, "\xC2\xA0", " ");      // nbsp
  ReplaceAll(s, " to ", "|");
  std::erase_if(s, [](char c) { return c == '*' || c == '~'; });
  while (!s.empty() && (s.back() == '+' || s.back() == ' ')) s.pop_back();
  if (Trim(s).empty()) return false;

  for (const auto& part : SplitRange(s)) {
    if (!ParsesAsNumber(StripUnits(part, units))) return false;
  }
  return true;
}

bool IsNumericColumn(std::span<const std::string> cells,
                     const UnitsDictionary& units) {
  std::size_t non_empty = 0;
  std::size_t numeric = 0;
  for (const auto& cell : cells) {
    if (Trim(cell).empty()) continue;
    ++non_empty;
    if (IsNumericCell(cell, units)) ++numeric;
  }
  if (non_empty == 0) return false;
  // numeric / non_empty >= 0.8, in integers.
  return numeric * 5 >= non_empty * 4;
}

}  // namespace catmine::ingest
