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


#include "catmine/svm/kernel_cache.h"

#include <algorithm>

#include "catmine/svm/kernel.h"

namespace catmine::svm {

KernelCache::KernelCache(const Problem& problem, double gamma,
                         std::size_t max_bytes)
    : problem_(problem),
      gamma_(gamma),
      where_(problem.size()),
      cached_(problem.size(), false),
      columns_(problem.size()) {
  const std::size_t column_bytes =
      std::max<std::size_t>(1, problem.size() * sizeof(double));
  capacity_ = std::clamp<std::size_t>(max_bytes / column_bytes, 2,
                                      std::max<std::size_t>(2, problem.size()));
}

std::span<const double> KernelCache::Column(std::size_t i) {
  if (cached_[i]) {
    lru_.splice(lru_.begin(), lru_, where_[i]);
    return columns_[i];
  }
  if (lru_.size() >= capacity_) {
    const std::size_t victim = lru_.back();
    lru_.pop_back();
    cached_[victim] = false;
    columns_[i].swap(columns_[victim]);
  }
  const std::size_t n = problem_.size();
  auto& column = columns_[i];
  column.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    column[j] = problem_.y[i] * problem_.y[j] *
                RbfKernel(problem_.x[i], problem_.x[j], gamma_);
  }
  ++computed_;
  lru_.push_front(i);
  where_[i] = lru_.begin();
  cached_[i] = true;
  return column;
}

}  // namespace catmine::svm
