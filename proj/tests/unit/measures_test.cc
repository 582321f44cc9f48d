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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "catmine/core/rng.h"
#include "catmine/core/value_set.h"
#include "catmine/measures/measures.h"

namespace catmine::measures {
namespace {

// Reference implementations written from the probability definitions, working
// on the expanded column rather than on the counts.
struct Oracle {
  std::vector<std::string> cells;

  std::map<std::string, double> Probabilities() const {
    std::map<std::string, double> p;
    for (const auto& c : cells) p[c] += 1.0 / cells.size();
    return p;
  }

  double Entropy() const {
    const double t = cells.size();
    double h = 0.0;
    for (const auto& [v, p] : Probabilities()) h -= p * std::log2(p);
    return h / std::log2(t);
  }
  double MaxCov() const {
    double m = 0.0;
    for (const auto& [v, p] : Probabilities()) m = std::max(m, p);
    return m;
  }
  double MaxInfoGap() const {
    const double t = cells.size();
    return 1.0 - std::log2(MaxCov()) / std::log2(1.0 / t);
  }
  // Draw two rows with replacement; probability they differ.
  double Unalike() const {
    double differ = 0.0;
    for (const auto& a : cells) {
      for (const auto& b : cells) differ += a != b;
    }
    return differ / (cells.size() * cells.size());
  }
  // Two distinct rows.
  double Simpson() const {
    double differ = 0.0, pairs = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (i == j) continue;
        pairs += 1.0;
        differ += cells[i] != cells[j];
      }
    }
    return differ / pairs;
  }
  static double RootDev(const std::map<std::string, double>& p) {
    double s = 0.0;
    for (const auto& [v, q] : p) s += (q - 0.5) * (q - 0.5);
    return std::sqrt(s);
  }
  double PDiversity() const {
    std::map<std::string, double> distinct;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      distinct["d" + std::to_string(i)] = 1.0 / cells.size();
    }
    // The all-distinct table is not the maximum for small tables dominated
    // by one value, hence the cap.
    return std::min(1.0, RootDev(Probabilities()) / RootDev(distinct));
  }
  static double L1FromUniform(const std::map<std::string, double>& p) {
    double s = 0.0;
    for (const auto& [v, q] : p) s += std::abs(q - 1.0 / p.size());
    return s;
  }
  double PPeculiarity() const {
    const auto p = Probabilities();
    const std::size_t n = p.size(), t = cells.size();
    // Most skewed table with the same size and number of values.
    std::vector<std::string> skew(t - n + 1, "big");
    for (std::size_t i = 1; i < n; ++i) skew.push_back("s" + std::to_string(i));
    return L1FromUniform(p) / L1FromUniform(Oracle{skew}.Probabilities());
  }
  std::array<double, 7> All() const {
    return {Entropy(), MaxCov(),     MaxInfoGap(), Unalike(),
            Simpson(), PPeculiarity(), PDiversity()};
  }
};

Oracle FromCounts(const std::vector<std::pair<std::string, int>>& counts) {
  Oracle o;
  for (const auto& [v, c] : counts) o.cells.insert(o.cells.end(), c, v);
  return o;
}

ValueSet ToValueSet(const std::vector<std::pair<std::string, int>>& counts) {
  std::vector<std::pair<std::string, std::int64_t>> c(counts.begin(),
                                                      counts.end());
  return ValueSet::FromCounts(c);
}

struct PublishedRow {
  std::vector<std::pair<std::string, int>> counts;
  std::array<double, 7> printed;
};

// Printed to two decimals; slot order entropy, mCov, mIg, U, D, pPec, pVar.
const std::vector<PublishedRow>& SampleMeasuresTable() {
  static const std::vector<PublishedRow> rows = {
      {{{"USA", 12}, {"Spain", 8}, {"Germany", 2}, {"China", 2},
        {"Australia", 2}, {"France", 2}},
       {.44, .43, .75, .71, .74, .58, .36}},
      {{{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}, {"f", 1}, {"g", 1}},
       {.77, .17, .28, .85, .92, .33, .66}},
      {{{"a", 12}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}, {"f", 1}, {"g", 1}},
       {.48, .55, .8, .67, .7, .69, .49}},
  };
  return rows;
}

TEST(MeasuresTest, SampleDistributionsMatchOracleAndPrintedValues) {
  for (const auto& row : SampleMeasuresTable()) {
    const auto oracle = FromCounts(row.counts).All();
    const FeatureVector fv = ComputeFeatures(ToValueSet(row.counts));
    for (std::size_t s = 0; s < 7; ++s) {
      EXPECT_NEAR(oracle[s], row.printed[s], 0.005) << "oracle slot " << s;
      EXPECT_NEAR(fv.values[s], oracle[s], 1e-12) << "slot " << s;
    }
    EXPECT_EQ(fv.degenerate, 0);
  }
}

TEST(MeasuresTest, DiversityComparisonLists) {
  struct Row {
    int a, b;
    double pvar, u, d;
  };
  const Row rows[] = {{80, 20, .09, .32, .32},
                      {60, 40, .03, .48, .48},
                      {4, 1, .63, .32, .4},
                      {3, 2, .21, .48, .6}};
  for (const auto& r : rows) {
    const std::vector<std::pair<std::string, int>> counts = {{"USA", r.a},
                                                             {"Spain", r.b}};
    const Oracle o = FromCounts(counts);
    const ValueSet vs = ToValueSet(counts);
    EXPECT_NEAR(o.PDiversity(), r.pvar, 0.005);
    EXPECT_NEAR(o.Unalike(), r.u, 0.005);
    EXPECT_NEAR(o.Simpson(), r.d, 0.005);
    EXPECT_NEAR(PDiversityNorm(vs), o.PDiversity(), 1e-12);
    EXPECT_NEAR(Unalikeability(vs), o.Unalike(), 1e-12);
    EXPECT_NEAR(SimpsonPeculiarity(vs), o.Simpson(), 1e-12);
  }
}

// Scaling every count leaves U unchanged but lowers pVar.
TEST(MeasuresTest, DiversityIsSizeSensitive) {
  const std::vector<std::int64_t> small = {4, 1}, large = {80, 20};
  const ValueSet s = ValueSet::FromFrequencies(small);
  const ValueSet l = ValueSet::FromFrequencies(large);
  EXPECT_DOUBLE_EQ(Unalikeability(s), Unalikeability(l));
  EXPECT_LT(PDiversityNorm(l), PDiversityNorm(s));
}

TEST(MeasuresTest, PeculiarityVersusInfoGapLists) {
  const std::vector<std::pair<std::string, int>> list1 = {{"USA", 90},
                                                          {"Spain", 10}};
  const std::vector<std::pair<std::string, int>> list2 = {{"USA", 9},
                                                          {"Spain", 1}};
  EXPECT_NEAR(FromCounts(list1).PPeculiarity(), .82, 0.005);
  EXPECT_NEAR(FromCounts(list1).MaxInfoGap(), .98, 0.005);
  EXPECT_NEAR(FromCounts(list2).PPeculiarity(), 1.0, 0.005);
  EXPECT_NEAR(FromCounts(list2).MaxInfoGap(), .95, 0.005);
  EXPECT_NEAR(PPeculiarityNorm(ToValueSet(list1)),
              FromCounts(list1).PPeculiarity(), 1e-12);
  EXPECT_NEAR(MaxInfoGap(ToValueSet(list2)), FromCounts(list2).MaxInfoGap(),
              1e-12);
}

// mIg for a column whose largest value covers `cov` of `t` rows.
double InfoGapAt(double cov, int t) {
  const auto top = static_cast<std::int64_t>(std::llround(cov * t));
  std::vector<std::int64_t> counts = {top};
  for (std::int64_t i = top; i < t; ++i) counts.push_back(1);
  return MaxInfoGap(ValueSet::FromFrequencies(counts));
}

TEST(MeasuresTest, InfoGapGrowsWithTableSizeAtLowCoverage) {
  // 1 - log(0.2) / log(1/T) by hand.
  EXPECT_NEAR(InfoGapAt(0.2, 10), 1.0 - std::log(0.2) / std::log(0.1), 1e-12);
  EXPECT_NEAR(InfoGapAt(0.2, 10), 0.30, 0.01);
  EXPECT_NEAR(InfoGapAt(0.2, 100), 0.65, 0.03);
  double lo = 1.0, hi = 0.0;
  for (int t = 10; t <= 100; t += 10) {
    const double v = InfoGapAt(0.9, t);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  EXPECT_LT(hi - lo, 0.05);
}

TEST(MeasuresTest, LargeSkewedExampleInfoGap) {
  // {60,50,45,60,40,60}: the formula gives log 60 / log 315.
  const std::vector<std::int64_t> counts = {60, 50, 45, 60, 40, 60};
  EXPECT_NEAR(MaxInfoGap(ValueSet::FromFrequencies(counts)),
              std::log(60.0) / std::log(315.0), 1e-12);
}

TEST(MeasuresTest, DegenerateConventions) {
  const std::vector<std::int64_t> single = {1};
  const FeatureVector one = ComputeFeatures(ValueSet::FromFrequencies(single));
  EXPECT_EQ(one.values[0], 0.0);  // entropy
  EXPECT_EQ(one.values[1], 1.0);  // mCov
  EXPECT_EQ(one.values[2], 1.0);  // mIg
  EXPECT_EQ(one.values[4], 0.0);  // D
  EXPECT_EQ(one.values[5], 1.0);  // pPec, n = 1
  EXPECT_EQ(one.values[6], 0.0);  // pVar, T <= 2
  EXPECT_NE(one.degenerate, 0);

  const std::vector<std::int64_t> same = {5};
  const ValueSet constant = ValueSet::FromFrequencies(same);
  EXPECT_EQ(EntropyNorm(constant), 0.0);
  EXPECT_EQ(Unalikeability(constant), 0.0);
  EXPECT_EQ(PPeculiarityNorm(constant), 1.0);
  EXPECT_TRUE(IsDegenerate(MeasureId::kPPeculiarity, constant));

  const std::vector<std::int64_t> distinct = {1, 1, 1, 1, 1};
  const ValueSet all = ValueSet::FromFrequencies(distinct);
  EXPECT_EQ(EntropyNorm(all), 1.0);
  EXPECT_EQ(PDiversityNorm(all), 1.0);
  EXPECT_EQ(PPeculiarityNorm(all), 0.0);
  EXPECT_DOUBLE_EQ(SimpsonPeculiarity(all), 1.0);
  EXPECT_FALSE(IsDegenerate(MeasureId::kEntropy, all));
}

// Every measure stays in [0, 1], is finite, and agrees with the oracle on
// random columns.
TEST(MeasuresProperty, BoundedAndMatchesOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng.UniformBelow(8);
    std::vector<std::pair<std::string, int>> counts;
    for (std::size_t i = 0; i < n; ++i) {
      counts.push_back({"v" + std::to_string(i),
                        1 + static_cast<int>(rng.UniformBelow(
                                rng.UniformBelow(2) ? 3 : 30))});
    }
    const ValueSet vs = ToValueSet(counts);
    const FeatureVector fv = ComputeFeatures(vs);
    const Oracle o = FromCounts(counts);
    const auto ref = o.All();
    for (std::size_t s = 0; s < 7; ++s) {
      ASSERT_TRUE(std::isfinite(fv.values[s]));
      EXPECT_GE(fv.values[s], 0.0);
      EXPECT_LE(fv.values[s], 1.0);
      const bool degenerate = (fv.degenerate >> s) & 1u;
      if (!degenerate && std::isfinite(ref[s])) {
        EXPECT_NEAR(fv.values[s], ref[s], 1e-9) << "slot " << s;
      }
    }
  }
}

}  // namespace
}  // namespace catmine::measures
