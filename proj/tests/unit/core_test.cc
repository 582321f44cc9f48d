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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catmine/core/error.h"
#include "catmine/core/feature_vector.h"
#include "catmine/core/normalize.h"
#include "catmine/core/parallel.h"
#include "catmine/core/rng.h"
#include "catmine/core/value_set.h"

namespace catmine {
namespace {

TEST(NormalizeTest, TrimsCollapsesAndLowers) {
  EXPECT_EQ(NormalizeValue("  United   States "), "united states");
  EXPECT_EQ(NormalizeValue("\tUSA\n"), "usa");
  EXPECT_EQ(NormalizeValue(""), "");
  EXPECT_EQ(NormalizeValue("   "), "");
  // Non-ASCII bytes pass through.
  EXPECT_EQ(NormalizeValue("M\xC3\xBCnchen"), "m\xC3\xBCnchen");
}

TEST(ValueSetTest, FromColumnMergesNormalizedCells) {
  const std::vector<std::string> cells = {"USA", " usa", "", "Spain", "  "};
  const ValueSet vs = ValueSet::FromColumn(cells);
  EXPECT_EQ(vs.table_size(), 3);
  EXPECT_EQ(vs.distinct(), 2u);
  EXPECT_EQ(vs.CountOf("usa"), 2);
  EXPECT_EQ(vs.CountOf("spain"), 1);
  EXPECT_EQ(vs.CountOf("france"), 0);
  EXPECT_EQ(vs.max_count(), 2);
}

TEST(ValueSetTest, EmptyColumnIsDataError) {
  const std::vector<std::string> cells = {"", " "};
  EXPECT_THROW(ValueSet::FromColumn(cells), DataError);
  const std::vector<std::int64_t> none;
  EXPECT_THROW(ValueSet::FromFrequencies(none), DataError);
}

TEST(ValueSetTest, NonPositiveCountRejected) {
  const std::vector<std::pair<std::string, std::int64_t>> counts = {
      {"a", 3}, {"b", 0}};
  EXPECT_THROW(ValueSet::FromCounts(counts), DataError);
}

TEST(ValueSetTest, FromCountsMergesDuplicates) {
  const std::vector<std::pair<std::string, std::int64_t>> counts = {
      {"USA", 3}, {"usa ", 2}, {"Spain", 1}};
  const ValueSet vs = ValueSet::FromCounts(counts);
  EXPECT_EQ(vs.CountOf("usa"), 5);
  EXPECT_EQ(vs.table_size(), 6);
}

// Shuffling the cells of a column never changes its value set, and
// expanding it back reproduces the same multiset.
TEST(ValueSetTest, PermutationInvarianceAndRoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.UniformBelow(40);
    std::vector<std::string> cells;
    for (std::size_t i = 0; i < n; ++i) {
      cells.push_back("v" + std::to_string(rng.UniformBelow(6)));
    }
    const ValueSet a = ValueSet::FromColumn(cells);
    std::vector<std::string> shuffled = cells;
    rng.Shuffle(std::span<std::string>(shuffled));
    EXPECT_EQ(a, ValueSet::FromColumn(shuffled));

    std::vector<std::string> expanded = a.ToColumn();
    EXPECT_EQ(static_cast<std::int64_t>(expanded.size()), a.table_size());
    EXPECT_EQ(a, ValueSet::FromColumn(expanded));
    std::sort(cells.begin(), cells.end());
    EXPECT_EQ(cells, expanded);
  }
}

TEST(FeatureMaskTest, ParsesBitStringInSlotOrder) {
  const auto m = FeatureMask::Parse("0110111");
  ASSERT_TRUE(m.has_value());
  EXPECT_FALSE(m->Has(MeasureId::kEntropy));
  EXPECT_TRUE(m->Has(MeasureId::kMaxCoverage));
  EXPECT_TRUE(m->Has(MeasureId::kMaxInfoGap));
  EXPECT_FALSE(m->Has(MeasureId::kUnalikeability));
  EXPECT_TRUE(m->Has(MeasureId::kPeculiarity));
  EXPECT_TRUE(m->Has(MeasureId::kPPeculiarity));
  EXPECT_TRUE(m->Has(MeasureId::kPDiversity));
  EXPECT_EQ(m->count(), 5);
  EXPECT_EQ(m->ToString(), "0110111");
  EXPECT_EQ(m->Slots(), (std::vector<std::size_t>{1, 2, 4, 5, 6}));
}

TEST(FeatureMaskTest, ParsesNamesAndRejectsJunk) {
  const auto m = FeatureMask::Parse("max_coverage+p_diversity");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, FeatureMask::Of({MeasureId::kMaxCoverage,
                                 MeasureId::kPDiversity}));
  EXPECT_EQ(m->Describe(), "max_coverage+p_diversity");
  EXPECT_FALSE(FeatureMask::Parse("011011").has_value());
  EXPECT_FALSE(FeatureMask::Parse("0120111").has_value());
  EXPECT_FALSE(FeatureMask::Parse("bogus").has_value());
}

TEST(FeatureMaskTest, EveryMaskRoundTrips) {
  for (int bits = 0; bits < 128; ++bits) {
    const FeatureMask m(static_cast<std::uint8_t>(bits));
    const auto back = FeatureMask::Parse(m.ToString());
    ASSERT_TRUE(back.has_value()) << bits;
    EXPECT_EQ(*back, m);
  }
}

TEST(MeasureNameTest, RoundTrips) {
  std::set<std::string_view> names;
  for (const MeasureId id : kAllMeasures) {
    names.insert(MeasureName(id));
    EXPECT_EQ(ParseMeasureName(MeasureName(id)), id);
  }
  EXPECT_EQ(names.size(), kNumMeasures);
}

TEST(FeatureVectorTest, SelectedFollowsMask) {
  FeatureVector v;
  for (std::size_t i = 0; i < kNumMeasures; ++i) v.values[i] = 0.1 * i;
  v.mask = *FeatureMask::Parse("1000001");
  const auto sel = v.Selected();
  ASSERT_EQ(sel.size(), 2u);
  EXPECT_DOUBLE_EQ(sel[0], 0.0);
  EXPECT_DOUBLE_EQ(sel[1], 0.6);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.Next();
    EXPECT_EQ(x, b.Next());
    differs |= x != c.Next();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, UniformBelowStaysInRangeAndCoversIt) {
  Rng rng(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.UniformBelow(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (const int s : seen) EXPECT_GT(s, 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.UniformUnit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng rng(9);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  rng.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const int h : hits) EXPECT_EQ(h, 1);
}

TEST(ParallelForTest, RethrowsLowestIndexFailure) {
  try {
    ParallelFor(100, 3, [](std::size_t i) {
      if (i == 17 || i == 60) throw DataError("fail " + std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const DataError& e) {
    EXPECT_STREQ(e.what(), "fail 17");
  }
}

TEST(ErrorTest, KindsMapToExitCodes) {
  EXPECT_EQ(static_cast<int>(UsageError("x").kind()), 1);
  EXPECT_EQ(static_cast<int>(DataError("x").kind()), 2);
  const ConvergenceError c("x", 0.5);
  EXPECT_EQ(static_cast<int>(c.kind()), 3);
  EXPECT_DOUBLE_EQ(c.residual(), 0.5);
}

}  // namespace
}  // namespace catmine
