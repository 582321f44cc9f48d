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

#ifndef CATMINE_CORE_RNG_H_
#define CATMINE_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace catmine {

// Seeded 64-bit generator used for every split and fold assignment.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions and std::shuffle are not, so bounded
// integers and shuffles are derived here by rejection sampling and a
// Fisher-Yates pass. Results are identical on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 bits of resolution.
  double UniformUnit();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(UniformBelow(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace catmine

#endif  // CATMINE_CORE_RNG_H_
