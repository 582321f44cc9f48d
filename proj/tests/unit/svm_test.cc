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

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "catmine/core/error.h"
#include "catmine/core/rng.h"
#include "catmine/svm/kernel.h"
#include "catmine/svm/kernel_cache.h"
#include "catmine/svm/model.h"
#include "catmine/svm/model_io.h"
#include "catmine/svm/problem.h"
#include "catmine/svm/solver.h"
#include "support/qp_oracle.h"
#include "support/synthetic.h"

namespace catmine::svm {
namespace {

Problem OneDim(std::vector<double> xs, std::vector<int> ys) {
  Problem p;
  p.mask = FeatureMask(1);
  for (const double x : xs) p.x.push_back({x});
  p.y = std::move(ys);
  return p;
}

TEST(KernelTest, KnownValueAndBounds) {
  const std::vector<double> a = {0, 0}, b = {1, 0};
  EXPECT_DOUBLE_EQ(RbfKernel(a, b, 1.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(RbfKernel(a, a, 3.0), 1.0);
  const std::vector<double> c = {1};
  EXPECT_THROW(RbfKernel(a, c, 1.0), DataError);

  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> u(7), v(7);
    for (auto& x : u) x = rng.UniformUnit();
    for (auto& x : v) x = rng.UniformUnit();
    const double gamma = std::pow(10.0, -3.0 + 4.0 * rng.UniformUnit());
    const double k = RbfKernel(u, v, gamma);
    EXPECT_LE(k, 1.0);
    EXPECT_GE(k, std::exp(-7.0 * gamma));
    EXPECT_DOUBLE_EQ(k, RbfKernel(v, u, gamma));
  }
}

TEST(KernelCacheTest, ColumnsMatchDirectKernelUnderEviction) {
  Rng rng(2);
  const Problem p = testing::RandomProblem(rng, 9, 3);
  KernelCache cache(p, 0.7, 1);  // room for the minimum of two columns
  EXPECT_EQ(cache.capacity(), 2u);
  for (int round = 0; round < 3; ++round) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto col = cache.Column(i);
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_DOUBLE_EQ(col[j],
                         p.y[i] * p.y[j] * RbfKernel(p.x[i], p.x[j], 0.7));
      }
    }
  }
  EXPECT_EQ(cache.computed(), 27u);
  KernelCache big(p, 0.7, 1 << 20);
  for (int round = 0; round < 3; ++round) {
    for (std::size_t i = 0; i < p.size(); ++i) big.Column(i);
  }
  EXPECT_EQ(big.computed(), 9u);
}

TEST(SolverTest, TwoPointsSplitAtMidpoint) {
  const Problem p = OneDim({0.0, 1.0}, {1, -1});
  const SvmModel m = TrainNuSvm(p, 1.0, 1.0);
  const std::vector<double> mid = {0.5}, left = {0.1}, right = {0.9};
  EXPECT_NEAR(DecisionValue(m, mid), 0.0, 1e-9);
  EXPECT_GT(DecisionValue(m, left), 0.0);
  EXPECT_LT(DecisionValue(m, right), 0.0);
  EXPECT_NEAR(DecisionValue(m, left), -DecisionValue(m, right), 1e-9);
  // Both points sit at the bound 1/2.
  EXPECT_NEAR(m.dual_coeffs[0], 0.5 * p.y[0], 1e-9);
  EXPECT_TRUE(CheckDualFeasibility(m).ok);
}

TEST(SolverTest, SymmetricSetHasZeroDecisionOnTheMirror) {
  const Problem p = OneDim({0.1, 0.2, 0.35, 0.65, 0.8, 0.9}, {1, 1, 1, -1, -1, -1});
  const SvmModel m = TrainNuSvm(p, 0.5, 2.0);
  const std::vector<double> mid = {0.5};
  EXPECT_NEAR(DecisionValue(m, mid), 0.0, 1e-6);
}

TEST(SolverTest, SeparableSetIsFitExactly) {
  Rng rng(3);
  const Problem p = testing::SeparableProblem(rng, 20, 7);
  const SvmModel m = TrainNuSvm(p, 0.1, 1.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_GT(p.y[i] * DecisionValue(m, p.x[i]), 0.0) << i;
  }
  EXPECT_TRUE(CheckDualFeasibility(m).ok);
}

TEST(SolverTest, RowOrderDoesNotChangeTheClassifier) {
  Rng rng(4);
  TrainOptions tight;
  tight.eps = 1e-10;
  for (int trial = 0; trial < 10; ++trial) {
    const Problem p = testing::RandomProblem(rng, 30, 4);
    const double nu = 0.5 * NuUpperBound(p);
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(std::span<std::size_t>(order));
    const SvmModel a = TrainNuSvm(p, nu, 2.0, tight);
    const SvmModel b = TrainNuSvm(p.Subset(order), nu, 2.0, tight);
    EXPECT_NEAR(a.objective, b.objective, 1e-9);
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<double> x(4);
      for (auto& v : x) v = rng.UniformUnit();
      EXPECT_NEAR(DecisionValue(a, x), DecisionValue(b, x), 1e-5);
    }
  }
}

TEST(SolverTest, MatchesBruteForceDualOnTinyProblems) {
  Rng rng(5);
  int compared = 0;
  TrainOptions tight;
  tight.eps = 1e-10;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.UniformBelow(5);
    const Problem p = testing::RandomProblem(rng, n, 2);
    const double nu = NuUpperBound(p) * (0.05 + 0.95 * rng.UniformUnit());
    const double gamma = std::pow(10.0, -1.0 + 2.0 * rng.UniformUnit());
    const auto oracle = testing::BruteForceNuDual(p, nu, gamma);
    ASSERT_TRUE(oracle.found);
    const SvmModel m = TrainNuSvm(p, nu, gamma, tight);
    EXPECT_NEAR(m.objective, oracle.objective, 1e-6) << "trial " << trial;
    ++compared;
  }
  EXPECT_EQ(compared, 40);
}

// Margin errors <= nu <= support vectors, up to one point of slack.
TEST(SolverProperty, NuBoundsErrorsAndSupportVectors) {
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + rng.UniformBelow(40);
    const Problem p = testing::RandomProblem(rng, n, 3);
    const double nu = NuUpperBound(p) * (0.05 + 0.95 * rng.UniformUnit());
    const double gamma = std::pow(10.0, -1.0 + 3.0 * rng.UniformUnit());
    const SvmModel m = TrainNuSvm(p, nu, gamma);
    const NuStats s = ComputeNuStats(m, p);
    const double slack = 1.0 / static_cast<double>(n);
    EXPECT_LE(s.margin_error_fraction, nu + slack);
    EXPECT_GE(s.support_vector_fraction, nu - slack);
    const auto f = CheckDualFeasibility(m);
    EXPECT_TRUE(f.ok);
    EXPECT_NEAR(f.alpha_sum, nu, 1e-8);
  }
}

TEST(SolverTest, RejectsBadInputs) {
  const Problem p = OneDim({0.0, 0.1, 0.2, 1.0}, {1, 1, 1, -1});
  EXPECT_DOUBLE_EQ(NuUpperBound(p), 0.5);
  EXPECT_NO_THROW(TrainNuSvm(p, 0.5, 1.0));
  EXPECT_THROW(TrainNuSvm(p, 0.51, 1.0), DataError);
  EXPECT_THROW(TrainNuSvm(p, 0.0, 1.0), DataError);
  EXPECT_THROW(TrainNuSvm(p, 0.3, 0.0), DataError);
  EXPECT_THROW(TrainNuSvm(OneDim({0.0, 1.0}, {1, 1}), 0.5, 1.0), DataError);
  EXPECT_THROW(TrainNuSvm(OneDim({0.0}, {1}), 0.5, 1.0), DataError);
}

TEST(SolverTest, IterationCapRaisesConvergenceError) {
  Rng rng(7);
  const Problem p = testing::RandomProblem(rng, 40, 3);
  TrainOptions capped;
  capped.max_iterations = 1;
  capped.eps = 1e-12;
  try {
    TrainNuSvm(p, 0.5 * NuUpperBound(p), 5.0, capped);
    FAIL();
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(PredictTest, NeedsEveryModelSlot) {
  Rng rng(8);
  Problem p = testing::SeparableProblem(rng, 10, 2);
  p.mask = *FeatureMask::Parse("1000001");
  const SvmModel m = TrainNuSvm(p, 0.2, 1.0);
  FeatureVector x;
  x.values = {0.1, 0.9, 0.9, 0.9, 0.9, 0.9, 0.1};
  x.mask = FeatureMask::All();
  const Prediction pr = Predict(m, x);
  EXPECT_EQ(pr.label, Label::kInteresting);
  EXPECT_GT(pr.decision_value, 0.0);
  x.mask = *FeatureMask::Parse("1000000");
  EXPECT_THROW(Predict(m, x), DataError);
}

TEST(ModelIoTest, RoundTripIsBitExact) {
  Rng rng(9);
  const Problem p = testing::RandomProblem(rng, 25, 7);
  SvmModel m = TrainNuSvm(p, 0.3, 0.37);
  const std::string text = SerializeModel(m);
  const SvmModel back = DeserializeModel(text);
  EXPECT_EQ(back, m);
  EXPECT_EQ(SerializeModel(back), text);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(DecisionValue(back, p.x[i]), DecisionValue(m, p.x[i]));
  }
}

TEST(ModelIoTest, RejectsMalformedModels) {
  Rng rng(10);
  SvmModel m = TrainNuSvm(testing::RandomProblem(rng, 10, 7), 0.4, 1.0);
  const std::string text = SerializeModel(m);
  EXPECT_THROW(DeserializeModel(text.substr(0, text.size() / 2)), DataError);

  std::string version = text;
  const auto at = version.find("\"version\": 1");
  ASSERT_NE(at, std::string::npos);
  version.replace(at, 12, "\"version\": 2");
  EXPECT_THROW(DeserializeModel(version), DataError);

  SvmModel empty = m;
  empty.support_vectors.clear();
  empty.dual_coeffs.clear();
  EXPECT_THROW(DeserializeModel(SerializeModel(empty)), DataError);

  SvmModel wrong_dim = m;
  wrong_dim.support_vectors[0].pop_back();
  EXPECT_THROW(DeserializeModel(SerializeModel(wrong_dim)), DataError);
}

TEST(ProblemTest, MasksAndSubsets) {
  Sample a, b;
  a.label = Label::kInteresting;
  a.features.values = {0, 1, 2, 3, 4, 5, 6};
  b.features.values = {6, 5, 4, 3, 2, 1, 0};
  const std::vector<Sample> samples = {a, b};
  const Problem p = MakeProblem(samples, *FeatureMask::Parse("0100001"));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.x[0], (std::vector<double>{1, 6}));
  EXPECT_EQ(p.y, (std::vector<int>{1, -1}));
  EXPECT_EQ(p.positives(), 1u);
  const std::vector<std::size_t> order = {1, 0};
  EXPECT_EQ(p.Subset(order).y, (std::vector<int>{-1, 1}));
}

}  // namespace
}  // namespace catmine::svm
