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

#ifndef CATMINE_CORE_VALUE_SET_H_
#define CATMINE_CORE_VALUE_SET_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catmine {

struct ValueCount {
  std::string value;
  std::int64_t count = 0;

  friend bool operator==(const ValueCount&, const ValueCount&) = default;
};

// Frequency multiset of the values of one categorical column.
//
// Entries are keyed by normalized value, sorted by value, and every count is
// at least one. table_size() is the number of non-empty cells, i.e. the sum
// of counts. Immutable once built.
class ValueSet {
 public:
  // Normalizes each cell and drops the empty ones. Throws DataError("empty
  // column") when nothing is left.
  static ValueSet FromColumn(std::span<const std::string> cells);

  // Builds from explicit (value, count) pairs. Values are normalized and
  // duplicates merged; throws DataError on a non-positive count or an empty
  // input.
  static ValueSet FromCounts(
      std::span<const std::pair<std::string, std::int64_t>> counts);

  // Anonymous values "v0", "v1", ... with the given counts.
  static ValueSet FromFrequencies(std::span<const std::int64_t> counts);

  const std::vector<ValueCount>& entries() const { return entries_; }
  std::int64_t table_size() const { return table_size_; }
  std::size_t distinct() const { return entries_.size(); }
  std::int64_t max_count() const;

  // Count for a normalized value, 0 when absent.
  std::int64_t CountOf(std::string_view normalized_value) const;

  // Expands back into one cell per occurrence, in entry order.
  std::vector<std::string> ToColumn() const;

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  ValueSet() = default;
  static ValueSet FromNormalized(std::vector<ValueCount> raw);

  std::vector<ValueCount> entries_;
  std::int64_t table_size_ = 0;
};

}  // namespace catmine

#endif  // CATMINE_CORE_VALUE_SET_H_
