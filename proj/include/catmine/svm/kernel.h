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


#ifndef CATMINE_SVM_KERNEL_H_
#define CATMINE_SVM_KERNEL_H_

#include <span>

namespace catmine::svm {

// exp(-gamma * |a - b|^2). Throws DataError on a dimension mismatch.
double RbfKernel(std::span<const double> a, std::span<const double> b,
                 double gamma);

}  // namespace catmine::svm

#endif  // CATMINE_SVM_KERNEL_H_
