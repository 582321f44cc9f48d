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

#ifndef CATMINE_CORE_FEATURE_VECTOR_H_
#define CATMINE_CORE_FEATURE_VECTOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmine {

inline constexpr std::size_t kNumMeasures = 7;

// Slot order of every feature vector, model file and sparse export.
enum class MeasureId : std::uint8_t {
  kEntropy = 0,
  kMaxCoverage = 1,
  kMaxInfoGap = 2,
  kUnalikeability = 3,
  kPeculiarity = 4,
  kPPeculiarity = 5,
  kPDiversity = 6,
};

inline constexpr std::array<MeasureId, kNumMeasures> kAllMeasures = {
    MeasureId::kEntropy,        MeasureId::kMaxCoverage,
    MeasureId::kMaxInfoGap,     MeasureId::kUnalikeability,
    MeasureId::kPeculiarity,    MeasureId::kPPeculiarity,
    MeasureId::kPDiversity,
};

constexpr std::size_t SlotOf(MeasureId id) {
  return static_cast<std::size_t>(id);
}

// Short machine name, e.g. "entropy", "p_diversity".
std::string_view MeasureName(MeasureId id);
std::optional<MeasureId> ParseMeasureName(std::string_view name);

// Which slots take part in kernel distances. Bit i is slot i.
class FeatureMask {
 public:
  constexpr FeatureMask() = default;
  constexpr explicit FeatureMask(std::uint8_t bits) : bits_(bits & 0x7f) {}

  static constexpr FeatureMask All() { return FeatureMask(0x7f); }
  static FeatureMask Of(std::initializer_list<MeasureId> ids);

  // Accepts a 7-character 0/1 string in slot order ("0011111") or a
  // '+'-separated list of measure names ("max_coverage+p_diversity").
  static std::optional<FeatureMask> Parse(std::string_view text);

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool Has(MeasureId id) const {
    return (bits_ >> SlotOf(id)) & 1u;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const;
  std::vector<std::size_t> Slots() const;

  // 7-character 0/1 string in slot order.
  std::string ToString() const;
  // '+'-joined measure names.
  std::string Describe() const;

  friend constexpr bool operator==(FeatureMask, FeatureMask) = default;
  friend constexpr auto operator<=>(FeatureMask a, FeatureMask b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint8_t bits_ = 0;
};

// The seven measures of one categorical column plus the selection mask.
struct FeatureVector {
  std::array<double, kNumMeasures> values{};
  FeatureMask mask = FeatureMask::All();
  // Bit i set when slot i was filled by a degenerate-input convention
  // (tiny tables, single or all-distinct values) rather than the formula.
  std::uint8_t degenerate = 0;

  double operator[](MeasureId id) const { return values[SlotOf(id)]; }

  // Values of the masked slots, in slot order.
  std::vector<double> Selected() const;
  std::vector<double> Selected(FeatureMask other) const;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

}  // namespace catmine

#endif  // CATMINE_CORE_FEATURE_VECTOR_H_
