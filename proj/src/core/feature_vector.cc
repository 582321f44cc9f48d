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

#include "catmine/core/feature_vector.h"

#include <bit>

#include "catmine/core/normalize.h"

namespace catmine {
namespace {

constexpr std::array<std::string_view, kNumMeasures> kNames = {
    "entropy",     "max_coverage",  "max_info_gap", "unalikeability",
    "peculiarity", "p_peculiarity", "p_diversity",
};

}  // namespace

std::string_view MeasureName(MeasureId id) { return kNames[SlotOf(id)]; }

std::optional<MeasureId> ParseMeasureName(std::string_view name) {
  const std::string lower = AsciiLower(Trim(name));
  for (MeasureId id : kAllMeasures) {
    if (kNames[SlotOf(id)] == lower) return id;
  }
  return std::nullopt;
}

FeatureMask FeatureMask::Of(std::initializer_list<MeasureId> ids) {
  std::uint8_t bits = 0;
  for (MeasureId id : ids) bits |= static_cast<std::uint8_t>(1u << SlotOf(id));
  return FeatureMask(bits);
}

std::optional<FeatureMask> FeatureMask::Parse(std::string_view text) {
  text = Trim(text);
  if (text.size() == kNumMeasures &&
      text.find_first_not_of("01") == std::string_view::npos) {
    std::uint8_t bits = 0;
    for (std::size_t i = 0; i < kNumMeasures; ++i) {
      if (text[i] == '1') bits |= static_cast<std::uint8_t>(1u << i);
    }
    return FeatureMask(bits);
  }
  std::uint8_t bits = 0;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const auto token = text.substr(0, plus);
    const auto id = ParseMeasureName(token);
    if (!id) return std::nullopt;
    bits |= static_cast<std::uint8_t>(1u << SlotOf(*id));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  if (bits == 0) return std::nullopt;
  return FeatureMask(bits);
}

int FeatureMask::count() const { return std::popcount(bits_); }

std::vector<std::size_t> FeatureMask::Slots() const {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < kNumMeasures; ++i) {
    if ((bits_ >> i) & 1u) slots.push_back(i);
  }
  return slots;
}

std::string FeatureMask::ToString() const {
  std::string out(kNumMeasures, '0');
  for (std::size_t i = 0; i < kNumMeasures; ++i) {
    if ((bits_ >> i) & 1u) out[i] = '1';
  }
  return out;
}

std::string FeatureMask::Describe() const {
  std::string out;
  for (std::size_t i : Slots()) {
    if (!out.empty()) out += '+';
    out += kNames[i];
  }
  return out;
}

std::vector<double> FeatureVector::Selected() const { return Selected(mask); }

std::vector<double> FeatureVector::Selected(FeatureMask other) const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(other.count()));
  for (std::size_t i : other.Slots()) out.push_back(values[i]);
  return out;
}

}  // namespace catmine
