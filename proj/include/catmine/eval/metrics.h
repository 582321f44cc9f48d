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


#ifndef CATMINE_EVAL_METRICS_H_
#define CATMINE_EVAL_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>

#include "catmine/core/sample.h"

namespace catmine::eval {

// Positive class = interesting.
struct Confusion {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fn + fp + tn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

// Undefined ratios (no predictions of the class, or no true members) are
// absent rather than zero. Precision doubles as class-specific accuracy.
struct ClassMetrics {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::size_t support = 0;  // true members
};

struct ClassReport {
  ClassMetrics interesting;
  ClassMetrics non_interesting;
  double accuracy = 0.0;
  Confusion confusion;
};

ClassReport MetricsFromConfusion(const Confusion& confusion);

// Throws UsageError when the lengths differ or are zero.
ClassReport ComputeClassMetrics(std::span<const Label> predictions,
                                std::span<const Label> truth);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_METRICS_H_
