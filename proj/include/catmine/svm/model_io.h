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


#ifndef CATMINE_SVM_MODEL_IO_H_
#define CATMINE_SVM_MODEL_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "catmine/svm/model.h"

namespace catmine::svm {

inline constexpr int kModelFormatVersion = 1;

// Versioned JSON; every real is written with 17 significant digits so that
// parsing restores the exact doubles.
std::string SerializeModel(const SvmModel& model);

// Throws DataError on a version mismatch, a schema violation or a model
// without support vectors.
SvmModel DeserializeModel(std::string_view text);

SvmModel ReadModelFile(const std::filesystem::path& path);

}  // namespace catmine::svm

#endif  // CATMINE_SVM_MODEL_IO_H_
