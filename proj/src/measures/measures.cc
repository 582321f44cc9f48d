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

#include "catmine/measures/measures.h"

#include <algorithm>
#include <cmath>

namespace catmine::measures {
namespace {

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double SumSquaredCounts(const ValueSet& vs) {
  double sum = 0.0;
  for (const auto& e : vs.entries()) {
    const double c = static_cast<double>(e.count);
    sum += c * c;
  }
  return sum;
}

}  // namespace

double EntropyNorm(const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  const std::size_t n = vs.distinct();
  if (t <= 1 || n == 1) return 0.0;
  if (static_cast<std::int64_t>(n) == t) return 1.0;
  // H / log T = 1 - sum c log c / (T log T); natural logs cancel.
  const double total = static_cast<double>(t);
  double sum_clogc = 0.0;
  for (const auto& e : vs.entries()) {
    const double c = static_cast<double>(e.count);
    sum_clogc += c * std::log(c);
  }
  return Clamp01(1.0 - sum_clogc / (total * std::log(total)));
}

double MaxCoverage(const ValueSet& vs) {
  return static_cast<double>(vs.max_count()) /
         static_cast<double>(vs.table_size());
}

double MaxInfoGap(const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  if (t <= 1) return 1.0;
  const double gap = std::log(static_cast<double>(vs.max_count())) /
                     std::log(static_cast<double>(t));
  return Clamp01(gap);
}

double Unalikeability(const ValueSet& vs) {
  if (vs.distinct() == 1) return 0.0;
  const double t = static_cast<double>(vs.table_size());
  return Clamp01(1.0 - SumSquaredCounts(vs) / (t * t));
}

double SimpsonPeculiarity(const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  if (t <= 1) return 0.0;
  double same_pairs = 0.0;
  for (const auto& e : vs.entries()) {
    const double c = static_cast<double>(e.count);
    same_pairs += c * (c - 1.0);
  }
  const double total = static_cast<double>(t);
  return Clamp01(1.0 - same_pairs / (total * (total - 1.0)));
}

double PDiversityNorm(const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  if (t <= 2) return 0.0;
  if (static_cast<std::int64_t>(vs.distinct()) == t) return 1.0;
  const double total = static_cast<double>(t);
  double sum_sq = 0.0;
  for (const auto& e : vs.entries()) {
    const double d = static_cast<double>(e.count) / total - 0.5;
    sum_sq += d * d;
  }
  const double max_raw = (0.5 * total - 1.0) / std::sqrt(total);
  return Clamp01(std::sqrt(sum_sq) / max_raw);
}

double PPeculiarityNorm(const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  const std::size_t n = vs.distinct();
  if (n == 1) return 1.0;
  if (static_cast<std::int64_t>(n) == t) return 0.0;
  const double total = static_cast<double>(t);
  const double uniform = 1.0 / static_cast<double>(n);
  double raw = 0.0;
  for (const auto& e : vs.entries()) {
    raw += std::abs(static_cast<double>(e.count) / total - uniform);
  }
  const double max_raw =
      static_cast<double>(n - 1) * std::abs(1.0 / total - uniform) +
      std::abs((total - static_cast<double>(n) + 1.0) / total - uniform);
  return Clamp01(raw / max_raw);
}

double Compute(MeasureId id, const ValueSet& vs) {
  switch (id) {
    case MeasureId::kEntropy:
      return EntropyNorm(vs);
    case MeasureId::kMaxCoverage:
      return MaxCoverage(vs);
    case MeasureId::kMaxInfoGap:
      return MaxInfoGap(vs);
    case MeasureId::kUnalikeability:
      return Unalikeability(vs);
    case MeasureId::kPeculiarity:
      return SimpsonPeculiarity(vs);
    case MeasureId::kPPeculiarity:
      return PPeculiarityNorm(vs);
    case MeasureId::kPDiversity:
      return PDiversityNorm(vs);
  }
  return 0.0;
}

bool IsDegenerate(MeasureId id, const ValueSet& vs) {
  const std::int64_t t = vs.table_size();
  const auto n = static_cast<std::int64_t>(vs.distinct());
  switch (id) {
    case MeasureId::kEntropy:
    case MeasureId::kMaxInfoGap:
    case MeasureId::kPeculiarity:
      return t <= 1;
    case MeasureId::kPDiversity:
      return t <= 2;
    case MeasureId::kPPeculiarity:
      return n == 1 || n == t;
    case MeasureId::kMaxCoverage:
    case MeasureId::kUnalikeability:
      return false;
  }
  return false;
}

FeatureVector ComputeFeatures(const ValueSet& vs, FeatureMask mask) {
  FeatureVector fv;
  fv.mask = mask;
  for (MeasureId id : kAllMeasures) {
    fv.values[SlotOf(id)] = Compute(id, vs);
    if (IsDegenerate(id, vs)) {
      fv.degenerate |= static_cast<std::uint8_t>(1u << SlotOf(id));
    }
  }
  return fv;
}

}  // namespace catmine::measures
