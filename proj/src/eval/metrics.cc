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


#include "catmine/eval/metrics.h"

#include "catmine/core/error.h"

namespace catmine::eval {
namespace {

std::optional<double> Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

ClassMetrics Metrics(std::size_t hits, std::size_t predicted, std::size_t actual) {
  ClassMetrics m;
  m.precision = Ratio(hits, predicted);
  m.recall = Ratio(hits, actual);
  m.support = actual;
  if (m.precision && m.recall) {
    const double p = *m.precision, r = *m.recall;
    m.f1 = p * r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
  return m;
}

}  // namespace

ClassReport MetricsFromConfusion(const Confusion& c) {
  ClassReport report;
  report.confusion = c;
  report.interesting = Metrics(c.tp, c.tp + c.fp, c.tp + c.fn);
  report.non_interesting = Metrics(c.tn, c.tn + c.fn, c.tn + c.fp);
  report.accuracy = c.total() == 0 ? 0.0
                                   : static_cast<double>(c.tp + c.tn) /
                                         static_cast<double>(c.total());
  return report;
}

ClassReport ComputeClassMetrics(std::span<const Label> predictions,
                                std::span<const Label> truth) {
  if (predictions.size() != truth.size() || truth.empty()) {
    throw UsageError("predictions and truth must be non-empty and equally long");
  }
  Confusion c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool p = predictions[i] == Label::kInteresting;
    const bool t = truth[i] == Label::kInteresting;
    if (p && t) ++c.tp;
    else if (!p && t) ++c.fn;
    else if (p && !t) ++c.fp;
    else ++c.tn;
  }
  return MetricsFromConfusion(c);
}

}  // namespace catmine::eval
