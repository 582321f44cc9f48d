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

#ifndef CATMINE_MEASURES_MEASURES_H_
#define CATMINE_MEASURES_MEASURES_H_

#include "catmine/core/feature_vector.h"
#include "catmine/core/value_set.h"

// Interestingness measures of a categorical column.
//
// Notation used below: T is the table size (number of non-empty cells), n the
// number of distinct values, c(x) the count of value x and P(x) = c(x) / T.
// Every measure returns a value in [0, 1]. Inputs too small for a formula get
// a fixed value instead of NaN; IsDegenerate() reports when that happened.
namespace catmine::measures {

// Shannon entropy over log2(T). 0 for a single value or T = 1, exactly 1 when
// all values are distinct.
double EntropyNorm(const ValueSet& vs);

// max_x P(x).
double MaxCoverage(const ValueSet& vs);

// 1 - log(mCov) / log(1/T), which simplifies to log(max c) / log(T).
// Grows with T for a fixed coverage. T = 1 yields 1.
double MaxInfoGap(const ValueSet& vs);

// 1 - sum P(x)^2.
double Unalikeability(const ValueSet& vs);

// Simpson's index with finite-population correction:
// 1 - sum c(x)(c(x)-1) / (T(T-1)). T = 1 yields 0.
double SimpsonPeculiarity(const ValueSet& vs);

// sqrt(sum (P(x) - 0.5)^2) divided by its all-distinct maximum
// (0.5 T - 1) / sqrt(T). T <= 2 yields 0.
double PDiversityNorm(const ValueSet& vs);

// sum |P(x) - 1/n| divided by the deviation of the most skewed table with
// the same T and n (one value takes T - n + 1 rows, the rest one row each).
// n = 1 yields 1; n = T yields 0.
double PPeculiarityNorm(const ValueSet& vs);

double Compute(MeasureId id, const ValueSet& vs);

// True when Compute(id, vs) returned a convention value.
bool IsDegenerate(MeasureId id, const ValueSet& vs);

// All seven measures in slot order, with degenerate flags.
FeatureVector ComputeFeatures(const ValueSet& vs,
                              FeatureMask mask = FeatureMask::All());

}  // namespace catmine::measures

#endif  // CATMINE_MEASURES_MEASURES_H_
