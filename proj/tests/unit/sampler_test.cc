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
#include "catmine/core/rng.h"
#include "catmine/ingest/corpus.h"
#include "catmine/sampler/cons_map.h"
#include "catmine/sampler/generate.h"
#include "catmine/sampler/sample_io.h"
#include "catmine/sampler/split.h"
#include "support/alg1_oracle.h"
#include "support/random_corpus.h"
#include "support/synthetic.h"

namespace catmine::sampler {
namespace {

TableRecord Table(std::string id, std::string subject,
                  std::vector<std::string> constraints,
                  std::vector<std::pair<std::string, std::vector<std::string>>>
                      categorical) {
  TableRecord t;
  t.id = std::move(id);
  t.subject = std::move(subject);
  t.metadata.constraints = std::move(constraints);
  Column s;
  s.name = "name";
  s.kind = ColumnKind::kSubject;
  for (std::size_t i = 0; i < categorical.front().second.size(); ++i) {
    s.cells.push_back("e" + std::to_string(i));
  }
  t.columns.push_back(std::move(s));
  for (auto& [name, cells] : categorical) {
    Column c;
    c.header = name;
    c.name = name;
    c.cells = std::move(cells);
    t.columns.push_back(std::move(c));
  }
  return t;
}

// World's tallest buildings and its United States child.
std::vector<TableRecord> TwoTableFixture() {
  return {
      Table("parent", "buildings", {},
            {{"city", {"Dubai", "Shanghai", "Mecca", "Shenzhen", "Tianjin",
                       "New York City"}},
             {"country", {"UAE", "China", "Saudi Arabia", "China", "China",
                          "United States"}}}),
      Table("child", "buildings", {"united states"},
            {{"city", {"New York City", "Chicago", "New York City"}}}),
  };
}

const Sample* Find(const SampleSet& s, std::string_view table,
                   std::string_view attribute) {
  for (const auto* list : {&s.interesting, &s.non_interesting}) {
    for (const auto& x : *list) {
      if (x.table_id == table && x.attribute == attribute) return &x;
    }
  }
  return nullptr;
}

TEST(ConsMapTest, ConstraintCollectsSubjects) {
  const std::vector<TableRecord> corpus = {
      Table("a", "buildings", {"united states"}, {{"city", {"x"}}}),
      Table("b", "universities", {"united states"}, {{"city", {"x"}}}),
      Table("c", "buildings", {"united states"}, {{"city", {"y"}}}),
  };
  const ConsMap m = ConsMap::Build(corpus);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.Subjects("united states"),
            (std::vector<std::string>{"buildings", "universities"}));
  const auto* tables = m.Tables("united states", SubjectKey("building"));
  ASSERT_NE(tables, nullptr);
  EXPECT_EQ(*tables, (std::set<std::string>{"a", "c"}));
  EXPECT_EQ(m.Tables("france", SubjectKey("buildings")), nullptr);
}

TEST(ConsMapTest, UnconstrainedCorpusGivesEmptyMap) {
  const std::vector<TableRecord> corpus = {
      Table("a", "buildings", {}, {{"city", {"x"}}})};
  EXPECT_TRUE(ConsMap::Build(corpus).empty());
}

TEST(ConsMapTest, MergeEqualsBuildOverConcatenation) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::RandomCorpus(rng, 20);
    const auto b = testing::RandomCorpus(rng, 20);
    std::vector<TableRecord> both = a;
    both.insert(both.end(), b.begin(), b.end());
    ConsMap merged = ConsMap::Build(a);
    merged.Merge(ConsMap::Build(b));
    EXPECT_EQ(merged, ConsMap::Build(both));
  }
}

TEST(GenerateTest, TwoTableFixture) {
  const auto s = GenerateSamples(TwoTableFixture());
  const Sample* country = Find(s, "parent", "country");
  const Sample* city = Find(s, "parent", "city");
  ASSERT_NE(country, nullptr);
  ASSERT_NE(city, nullptr);
  EXPECT_EQ(country->label, Label::kInteresting);
  EXPECT_EQ(country->witness, "united states -> child");
  EXPECT_EQ(city->label, Label::kNonInteresting);
  EXPECT_FALSE(city->witness.has_value());
  // The child's city column has no child of its own.
  EXPECT_EQ(Find(s, "child", "city")->label, Label::kNonInteresting);
  EXPECT_TRUE(CheckWitness(*country, TwoTableFixture()));
}

TEST(GenerateTest, SingleUnconstrainedTableIsAllNegative) {
  const std::vector<TableRecord> corpus = {
      Table("a", "buildings", {}, {{"city", {"x", "y"}}, {"country", {"z", "z"}}})};
  const auto s = GenerateSamples(corpus);
  EXPECT_TRUE(s.interesting.empty());
  EXPECT_EQ(s.non_interesting.size(), 2u);
}

TEST(GenerateTest, SubjectlessTableSkippedWithWarning) {
  auto corpus = TwoTableFixture();
  corpus[1].subject.clear();
  std::vector<ingest::Warning> warnings;
  const auto s = GenerateSamples(corpus, ConsMap::Build(corpus), {}, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].table_id, "child");
  EXPECT_EQ(s.size(), 2u);
}

TEST(GenerateTest, SyntheticCorpusMatchesHandLabels) {
  const auto corpus = ingest::LoadCorpus(
      testing::DataPath("synthetic_corpus.json"), ingest::CorpusFormat::kJson);
  const auto expected =
      testing::ReadExpectedLabels(testing::DataPath("synthetic_labels.tsv"));
  const auto s = GenerateSamples(corpus.tables);
  EXPECT_EQ(s.size(), expected.size());
  for (const auto& x : s.All()) {
    const auto it = expected.find({x.table_id, x.attribute});
    ASSERT_NE(it, expected.end()) << x.Id();
    EXPECT_EQ(x.label, it->second) << x.Id();
    if (x.label == Label::kInteresting) {
      EXPECT_TRUE(CheckWitness(x, corpus.tables)) << x.Id();
    }
  }
}

// Labels agree with the all-pairs oracle, do not depend on input order, and
// every categorical column yields exactly one sample.
TEST(GenerateProperty, OracleOrderAndCount) {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto corpus = testing::RandomCorpus(rng, 30);
    const auto s = GenerateSamples(corpus);
    const auto oracle = testing::BruteForceLabels(corpus);

    std::size_t columns = 0;
    for (const auto& t : corpus) {
      if (!t.subject.empty()) columns += t.Categorical().size();
    }
    EXPECT_EQ(s.size(), columns);
    EXPECT_EQ(s.size(), oracle.size());
    for (const auto& x : s.All()) {
      const auto it = oracle.find({x.table_id, x.attribute});
      ASSERT_NE(it, oracle.end());
      EXPECT_EQ(x.label, it->second.label) << x.Id();
      EXPECT_EQ(x.witness, it->second.witness) << x.Id();
      if (x.label == Label::kInteresting) {
        EXPECT_TRUE(CheckWitness(x, corpus)) << x.Id();
      }
    }

    std::set<std::pair<std::string, std::string>> pos, neg;
    for (const auto& x : s.interesting) pos.insert({x.subject, x.attribute});
    for (const auto& x : s.non_interesting) neg.insert({x.subject, x.attribute});
    for (const auto& p : pos) EXPECT_EQ(neg.count(p), 0u);

    rng.Shuffle(std::span<TableRecord>(corpus));
    GenerateOptions parallel;
    parallel.jobs = 3;
    EXPECT_EQ(GenerateSamples(corpus, parallel), s);
  }
}

TEST(GenerateTest, DedupKeepsFirstOccurrence) {
  const std::vector<TableRecord> corpus = {
      Table("a", "lakes", {}, {{"country", {"x", "y"}}}),
      Table("b", "lakes", {}, {{"country", {"x", "x"}}}),
  };
  GenerateOptions dedup;
  dedup.dedup_keep_first = true;
  EXPECT_EQ(GenerateSamples(corpus).size(), 2u);
  const auto s = GenerateSamples(corpus, dedup);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.non_interesting[0].table_id, "a");
}

TEST(GenerateTest, CorpusHashIgnoresOrderAndTracksContent) {
  auto corpus = TwoTableFixture();
  const std::string h = CorpusHash(corpus);
  EXPECT_EQ(h.size(), 16u);
  std::reverse(corpus.begin(), corpus.end());
  EXPECT_EQ(CorpusHash(corpus), h);
  corpus[0].columns[1].cells[0] = "Boston";
  EXPECT_NE(CorpusHash(corpus), h);
}

SampleSet Synthetic(std::size_t pos, std::size_t neg) {
  SampleSet s;
  for (std::size_t i = 0; i < pos + neg; ++i) {
    Sample x;
    x.table_id = "t" + std::to_string(i);
    x.subject = "s";
    x.attribute = "a";
    x.label = i < pos ? Label::kInteresting : Label::kNonInteresting;
    for (std::size_t k = 0; k < kNumMeasures; ++k) {
      x.features.values[k] = static_cast<double>((i * 7 + k) % 11) / 10.0;
    }
    if (x.label == Label::kInteresting) x.witness = "v -> c";
    s.Add(std::move(x));
  }
  return s;
}

TEST(SplitTest, HoldsOutAQuarterOfEachClass) {
  const auto split = MakeHoldoutSplit(Synthetic(158, 2519), 0.25, 1);
  EXPECT_EQ(split.test_pos.size(), 40u);
  EXPECT_EQ(split.test_neg.size(), 630u);
  EXPECT_EQ(split.train.interesting.size(), 118u);
  EXPECT_EQ(split.train.non_interesting.size(), 1889u);
  EXPECT_EQ(split.train.provenance.seed, 1u);
}

TEST(SplitTest, TinyClassesAndErrors) {
  const auto split = MakeHoldoutSplit(Synthetic(4, 4), 0.5, 3);
  EXPECT_EQ(split.test_pos.size(), 2u);
  EXPECT_EQ(split.test_neg.size(), 2u);
  EXPECT_THROW(MakeHoldoutSplit(Synthetic(1, 4), 0.5, 3), DataError);
  EXPECT_THROW(MakeHoldoutSplit(Synthetic(4, 4), 0.0, 3), UsageError);
  EXPECT_THROW(MakeHoldoutSplit(Synthetic(4, 4), 1.0, 3), UsageError);
}

// Train and test partition the input, keep relative order, and the split is
// a function of the seed.
TEST(SplitProperty, PartitionOrderAndDeterminism) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t pos = 2 + rng.UniformBelow(30);
    const std::size_t neg = 2 + rng.UniformBelow(200);
    const auto input = Synthetic(pos, neg);
    const std::uint64_t seed = rng.Next();
    const auto a = MakeHoldoutSplit(input, 0.25, seed);
    EXPECT_EQ(a.train, MakeHoldoutSplit(input, 0.25, seed).train);
    EXPECT_EQ(a.train.size() + a.test_pos.size() + a.test_neg.size(),
              input.size());
    std::set<std::string> ids;
    for (const auto* set : {&a.train, &a.test_pos, &a.test_neg}) {
      const auto all = set->All();
      for (const auto& x : all) EXPECT_TRUE(ids.insert(x.table_id).second);
      // Synthetic ids increase with input position inside each class.
      auto index = [](const Sample& x) { return std::stoi(x.table_id.substr(1)); };
      for (const auto* list : {&set->interesting, &set->non_interesting}) {
        for (std::size_t i = 1; i < list->size(); ++i) {
          EXPECT_LT(index((*list)[i - 1]), index((*list)[i]));
        }
      }
    }
    EXPECT_TRUE(a.test_pos.non_interesting.empty());
    EXPECT_TRUE(a.test_neg.interesting.empty());
  }
}

TEST(SubfileTest, NegativesPartitionedEvenly) {
  const auto train = Synthetic(12, 103);
  const auto subfiles = MakeBalancedSubfiles(train, 10, 8);
  ASSERT_EQ(subfiles.size(), 10u);
  std::multiset<std::string> negatives;
  for (const auto& s : subfiles) {
    EXPECT_EQ(s.interesting, train.interesting);
    EXPECT_GE(s.non_interesting.size(), 10u);
    EXPECT_LE(s.non_interesting.size(), 11u);
    for (const auto& x : s.non_interesting) negatives.insert(x.table_id);
  }
  EXPECT_EQ(negatives.size(), 103u);
  EXPECT_EQ(std::set<std::string>(negatives.begin(), negatives.end()).size(),
            103u);
  EXPECT_EQ(MakeBalancedSubfiles(train, 10, 8), subfiles);
}

TEST(SampleIoTest, JsonlRoundTripIsExact) {
  auto s = Synthetic(3, 5);
  s.provenance.corpus_hash = "0123456789abcdef";
  s.provenance.seed = 42;
  s.interesting[0].features.values[2] = 0.1 + 0.2;  // not a short decimal
  s.interesting[0].features.degenerate = 5;
  const std::string text = WriteSamplesJsonl(s);
  const auto back = ParseSamplesJsonl(text, "mem");
  EXPECT_EQ(back, s);
  EXPECT_EQ(WriteSamplesJsonl(back), text);
}

TEST(SampleIoTest, RejectsBadLines) {
  const std::string good =
      R"({"table_id":"t","subject":"s","attribute":"a","label":"interesting","features":[0,0,0,0,0,0,0],"degenerate":0,"witness":"x -> y"})";
  EXPECT_EQ(ParseSamplesJsonl(good + "\n", "f").size(), 1u);
  std::string bad_label = good;
  bad_label.replace(bad_label.find("interesting"), 11, "maybe");
  EXPECT_THROW(ParseSamplesJsonl(bad_label, "f"), DataError);
  std::string out_of_range = good;
  out_of_range.replace(out_of_range.find("[0,"), 3, "[2,");
  EXPECT_THROW(ParseSamplesJsonl(out_of_range, "f"), DataError);
  try {
    ParseSamplesJsonl(good + "\n{", "f");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("f:2"), std::string::npos);
  }
}

TEST(SampleIoTest, SparseFormat) {
  SampleSet s;
  Sample x;
  x.label = Label::kInteresting;
  x.features.values = {0.5, 0.25, 0, 0, 0, 0, 1};
  s.Add(x);
  x.label = Label::kNonInteresting;
  s.Add(x);
  EXPECT_EQ(WriteSparse(s, *FeatureMask::Parse("1100001")),
            "+1 1:0.5 2:0.25 7:1\n-1 1:0.5 2:0.25 7:1\n");
}

}  // namespace
}  // namespace catmine::sampler
