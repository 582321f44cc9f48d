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

#include "catmine/core/value_set.h"

#include <algorithm>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"

namespace catmine {

ValueSet ValueSet::FromNormalized(std::vector<ValueCount> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const ValueCount& a, const ValueCount& b) {
              return a.value < b.value;
            });
  ValueSet vs;
  for (auto& entry : raw) {
    if (entry.count <= 0) {
      throw DataError("non-positive count for value '" + entry.value + "'");
    }
    vs.table_size_ += entry.count;
    if (!vs.entries_.empty() && vs.entries_.back().value == entry.value) {
      vs.entries_.back().count += entry.count;
    } else {
      vs.entries_.push_back(std::move(entry));
    }
  }
  if (vs.entries_.empty()) throw DataError("empty column");
  return vs;
}

ValueSet ValueSet::FromColumn(std::span<const std::string> cells) {
  std::vector<ValueCount> raw;
  raw.reserve(cells.size());
  for (const auto& cell : cells) {
    std::string value = NormalizeValue(cell);
    if (value.empty()) continue;
    raw.push_back({std::move(value), 1});
  }
  return FromNormalized(std::move(raw));
}

ValueSet ValueSet::FromCounts(
    std::span<const std::pair<std::string, std::int64_t>> counts) {
  std::vector<ValueCount> raw;
  raw.reserve(counts.size());
  for (const auto& [value, count] : counts) {
    std::string normalized = NormalizeValue(value);
    if (normalized.empty()) throw DataError("empty value name");
    raw.push_back({std::move(normalized), count});
  }
  return FromNormalized(std::move(raw));
}

ValueSet ValueSet::FromFrequencies(std::span<const std::int64_t> counts) {
  std::vector<ValueCount> raw;
  raw.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    raw.push_back({"v" + std::to_string(i), counts[i]});
  }
  return FromNormalized(std::move(raw));
}

std::int64_t ValueSet::max_count() const {
  std::int64_t best = 0;
  for (const auto& entry : entries_) best = std::max(best, entry.count);
  return best;
}

std::int64_t ValueSet::CountOf(std::string_view normalized_value) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), normalized_value,
      [](const ValueCount& e, std::string_view v) { return e.value < v; });
  return (it != entries_.end() && it->value == normalized_value) ? it->count
                                                                 : 0;
}

std::vector<std::string> ValueSet::ToColumn() const {
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(table_size_));
  for (const auto& entry : entries_) {
    cells.insert(cells.end(), static_cast<std::size_t>(entry.count),
                 entry.value);
  }
  return cells;
}

}  // namespace catmine
