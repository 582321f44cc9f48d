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


#include "catmine/eval/agreement.h"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"

namespace catmine::eval {
namespace {

int ParseInt(std::string_view text) {
  text = Trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(fmt::format("levels: '{}' is not an integer", text));
  }
  return v;
}

}  // namespace

GroundTruth MajorityGroundTruth(const AssessmentMatrix& m, int x) {
  const int y = static_cast<int>(m.evaluators());
  if (2 * x <= y || x > y) {
    throw UsageError(fmt::format(
        "agreement level {}/{} is not a strict majority", x, y));
  }
  GroundTruth gt;
  gt.level = x;
  for (std::size_t row = 0; row < m.samples(); ++row) {
    const auto counts = m.Counts(row);
    const auto top = std::max_element(counts.begin(), counts.end());
    if (*top < x) {
      gt.excluded.push_back(row);
      continue;
    }
    switch (static_cast<Vote>(top - counts.begin())) {
      case Vote::kInteresting:
        gt.user_pos.push_back(row);
        break;
      case Vote::kNonInteresting:
        gt.user_neg.push_back(row);
        break;
      case Vote::kNotSure:
        gt.excluded.push_back(row);
        break;
    }
  }
  return gt;
}

std::vector<int> DefaultAgreementLevels(int evaluators) {
  std::vector<int> levels;
  for (int x = evaluators / 2 + 1; x <= evaluators; ++x) levels.push_back(x);
  return levels;
}

std::vector<int> ParseLevels(std::string_view text) {
  text = Trim(text);
  std::vector<int> levels;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = ParseInt(text.substr(0, dots));
    const int hi = ParseInt(text.substr(dots + 2));
    if (lo > hi) throw UsageError("levels: empty range");
    for (int x = lo; x <= hi; ++x) levels.push_back(x);
    return levels;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    levels.push_back(ParseInt(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return levels;
}

}  // namespace catmine::eval
