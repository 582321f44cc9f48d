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


#ifndef CATMINE_SVM_KERNEL_CACHE_H_
#define CATMINE_SVM_KERNEL_CACHE_H_

#include <cstddef>
#include <list>
#include <span>
#include <vector>

#include "catmine/svm/problem.h"

namespace catmine::svm {

// Columns of Q[i][j] = y_i y_j K(x_i, x_j), computed on demand and kept in a
// least-recently-used cache of bounded size (never fewer than two columns).
// A returned span stays valid until two further distinct columns have been
// requested.
class KernelCache {
 public:
  KernelCache(const Problem& problem, double gamma, std::size_t max_bytes);

  std::span<const double> Column(std::size_t i);

  std::size_t capacity() const { return capacity_; }
  std::size_t computed() const { return computed_; }

 private:
  const Problem& problem_;
  double gamma_;
  std::size_t capacity_;
  std::size_t computed_ = 0;
  std::list<std::size_t> lru_;  // front = most recent
  std::vector<std::list<std::size_t>::iterator> where_;
  std::vector<bool> cached_;
  std::vector<std::vector<double>> columns_;
};

}  // namespace catmine::svm

#endif  // CATMINE_SVM_KERNEL_CACHE_H_
