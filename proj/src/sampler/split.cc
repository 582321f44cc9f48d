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


#include "catmine/sampler/split.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/rng.h"

namespace catmine::sampler {
namespace {

// Returns a membership flag per sample: true when held out.
std::vector<bool> ChooseHeldOut(std::size_t n, double fraction, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(std::span<std::size_t>(order));
  auto take = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  take = std::clamp<std::size_t>(take, 1, n - 1);
  std::vector<bool> held(n, false);
  for (std::size_t i = 0; i < take; ++i) held[order[i]] = true;
  return held;
}

}  // namespace

HoldoutSplit MakeHoldoutSplit(const SampleSet& samples, double test_fraction,
                              std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw UsageError(fmt::format("test fraction must be in (0, 1), got {}",
                                 test_fraction));
  }
  if (samples.interesting.size() < 2 || samples.non_interesting.size() < 2) {
    throw DataError(fmt::format(
        "class too small to split ({} interesting, {} non_interesting)",
        samples.interesting.size(), samples.non_interesting.size()));
  }
  Rng rng(seed);
  const auto pos_held = ChooseHeldOut(samples.interesting.size(), test_fraction, rng);
  const auto neg_held =
      ChooseHeldOut(samples.non_interesting.size(), test_fraction, rng);

  HoldoutSplit split;
  for (std::size_t i = 0; i < samples.interesting.size(); ++i) {
    (pos_held[i] ? split.test_pos : split.train).Add(samples.interesting[i]);
  }
  for (std::size_t i = 0; i < samples.non_interesting.size(); ++i) {
    (neg_held[i] ? split.test_neg : split.train).Add(samples.non_interesting[i]);
  }
  Provenance provenance = samples.provenance;
  provenance.seed = seed;
  split.train.provenance = split.test_pos.provenance =
      split.test_neg.provenance = provenance;
  return split;
}

std::vector<SampleSet> MakeBalancedSubfiles(const SampleSet& train, int k,
                                            std::uint64_t seed) {
  if (k < 1) throw UsageError("subfile count must be at least 1");
  const std::size_t n = train.non_interesting.size();
  if (static_cast<std::size_t>(k) > n) {
    throw DataError(fmt::format(
        "cannot cut {} negative samples into {} subfiles", n, k));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<std::size_t>(order));

  const std::size_t chunks = static_cast<std::size_t>(k);
  std::vector<SampleSet> files(chunks);
  std::size_t next = 0;
  for (std::size_t i = 0; i < chunks; ++i) {
    const std::size_t size = n / chunks + (i < n % chunks ? 1 : 0);
    std::vector<std::size_t> chunk(order.begin() + next,
                                   order.begin() + next + size);
    next += size;
    std::sort(chunk.begin(), chunk.end());
    files[i].interesting = train.interesting;
    for (const std::size_t j : chunk) {
      files[i].non_interesting.push_back(train.non_interesting[j]);
    }
    files[i].provenance = train.provenance;
    files[i].provenance.seed = seed;
  }
  return files;
}

}  // namespace catmine::sampler
