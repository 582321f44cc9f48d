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

#ifndef CATMINE_CORE_NORMALIZE_H_
#define CATMINE_CORE_NORMALIZE_H_

#include <string>
#include <string_view>

namespace catmine {

// Canonical form for cell values, constraints and subjects: surrounding
// whitespace trimmed, inner whitespace runs collapsed to one space, ASCII
// letters lower-cased. Non-ASCII bytes pass through untouched.
std::string NormalizeValue(std::string_view text);

// Trims ASCII whitespace on both ends.
std::string_view Trim(std::string_view text);

std::string AsciiLower(std::string_view text);

}  // namespace catmine

#endif  // CATMINE_CORE_NORMALIZE_H_
