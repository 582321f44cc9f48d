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

#ifndef CATMINE_CORE_SAMPLE_H_
#define CATMINE_CORE_SAMPLE_H_

#include <optional>
#include <string>
#include <string_view>

#include "catmine/core/feature_vector.h"

namespace catmine {

enum class Label { kInteresting, kNonInteresting };

inline std::string_view LabelName(Label label) {
  return label == Label::kInteresting ? "interesting" : "non_interesting";
}

inline std::optional<Label> ParseLabel(std::string_view text) {
  if (text == "interesting") return Label::kInteresting;
  if (text == "non_interesting") return Label::kNonInteresting;
  return std::nullopt;
}

// One (subject, categorical attribute) training example.
struct Sample {
  std::string table_id;
  std::string subject;
  std::string attribute;
  FeatureVector features;
  Label label = Label::kNonInteresting;
  // "<constraint value> -> <child table id>" for interesting samples.
  std::optional<std::string> witness;

  // Stable identifier used by assessment files: "<table_id>/<attribute>".
  std::string Id() const { return table_id + "/" + attribute; }

  friend bool operator==(const Sample&, const Sample&) = default;
};

}  // namespace catmine

#endif  // CATMINE_CORE_SAMPLE_H_
