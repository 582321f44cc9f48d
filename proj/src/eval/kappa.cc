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


#include "catmine/eval/kappa.h"

#include <cmath>

#include <fmt/format.h>

#include "catmine/core/error.h"

namespace catmine::eval {

KappaResult FleissKappa(const std::vector<std::array<int, kNumVotes>>& counts) {
  if (counts.size() < 2) throw UsageError("kappa needs at least two samples");
  int raters = 0;
  for (const int c : counts[0]) raters += c;
  if (raters < 2) throw UsageError("kappa needs at least two evaluators");

  const double N = static_cast<double>(counts.size());
  const double n = raters;
  KappaResult r;
  double p_sum = 0.0;
  for (const auto& item : counts) {
    int total = 0, squares = 0;
    for (const int c : item) {
      if (c < 0) throw DataError("negative vote count");
      total += c;
      squares += c * c;
    }
    if (total != raters) {
      throw DataError(fmt::format("every sample needs {} votes, found {}", raters, total));
    }
    for (std::size_t j = 0; j < kNumVotes; ++j) r.proportions[j] += item[j];
    p_sum += (squares - n) / (n * (n - 1.0));
  }
  for (double& p : r.proportions) p /= N * n;
  r.p_bar = p_sum / N;
  for (const double p : r.proportions) r.pe_bar += p * p;

  if (r.p_bar == 1.0 || r.pe_bar == 1.0) {
    r.kappa = 1.0;
  } else {
    r.kappa = (r.p_bar - r.pe_bar) / (1.0 - r.pe_bar);
  }

  double pq_sum = 0.0, pq_skew = 0.0;
  for (std::size_t j = 0; j < kNumVotes; ++j) {
    const double p = r.proportions[j], q = 1.0 - p;
    pq_sum += p * q;
    pq_skew += p * q * (q - p);
    if (p * q == 0.0) continue;
    double disagreement = 0.0;
    for (const auto& item : counts) disagreement += item[j] * (n - item[j]);
    r.category_kappa[j] = 1.0 - disagreement / (N * n * (n - 1.0) * p * q);
  }
  if (pq_sum > 0.0) {
    const double variance_term = std::max(0.0, pq_sum * pq_sum - pq_skew);
    r.standard_error =
        std::sqrt(2.0 / (N * n * (n - 1.0))) * std::sqrt(variance_term) / pq_sum;
  }
  r.ci_low = r.kappa - 1.96 * r.standard_error;
  r.ci_high = r.kappa + 1.96 * r.standard_error;
  return r;
}

KappaResult FleissKappa(const AssessmentMatrix& m) {
  std::vector<std::array<int, kNumVotes>> counts;
  counts.reserve(m.samples());
  for (std::size_t row = 0; row < m.samples(); ++row) counts.push_back(m.Counts(row));
  return FleissKappa(counts);
}

}  // namespace catmine::eval
