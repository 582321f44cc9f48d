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


#ifndef CATMINE_EVAL_ASSESSMENTS_H_
#define CATMINE_EVAL_ASSESSMENTS_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmine::eval {

enum class Vote { kInteresting = 0, kNonInteresting = 1, kNotSure = 2 };
inline constexpr std::size_t kNumVotes = 3;

// "I", "N", "U" (any case) or the full words.
std::optional<Vote> ParseVote(std::string_view text);
char VoteLetter(Vote vote);

// One row per sample, one column per evaluator.
struct AssessmentMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<Vote>> votes;

  std::size_t samples() const { return votes.size(); }
  std::size_t evaluators() const { return votes.empty() ? 0 : votes[0].size(); }

  // Votes per category for one sample.
  std::array<int, kNumVotes> Counts(std::size_t row) const;
};

// CSV with a header row; the column named "id" (or else the first column)
// holds sample ids, every other column one evaluator. Blank lines are
// skipped. Throws DataError on unknown votes, empty cells or ragged rows.
AssessmentMatrix ParseAssessmentsCsv(std::string_view text,
                                     std::string_view source);
AssessmentMatrix ReadAssessmentsFile(const std::filesystem::path& path);

}  // namespace catmine::eval

#endif  // CATMINE_EVAL_ASSESSMENTS_H_
