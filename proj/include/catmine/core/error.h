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

#ifndef CATMINE_CORE_ERROR_H_
#define CATMINE_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace catmine {

// The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  kUsage = 1,
  kData = 2,
  kConvergence = 3,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ErrorKind::kUsage, message) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& message)
      : Error(ErrorKind::kData, message) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual)
      : Error(ErrorKind::kConvergence, message), residual_(residual) {}

  // Largest remaining KKT violation when the solver gave up.
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace catmine

#endif  // CATMINE_CORE_ERROR_H_
