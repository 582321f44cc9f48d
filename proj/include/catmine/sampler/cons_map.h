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


#ifndef CATMINE_SAMPLER_CONS_MAP_H_
#define CATMINE_SAMPLER_CONS_MAP_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "catmine/core/table.h"

namespace catmine::sampler {

// Stemmed form of a table subject, the key used when matching subjects.
std::string SubjectKey(std::string_view subject);

// Index from constraint value to the subjects (and tables) listed under it.
class ConsMap {
 public:
  static ConsMap Build(const std::vector<TableRecord>& corpus);

  void Add(const std::string& constraint, const std::string& subject,
           const std::string& table_id);
  // Set union; Build over a concatenation equals Merge of the parts.
  void Merge(const ConsMap& other);

  // Normalized subjects recorded under `constraint`, sorted.
  std::vector<std::string> Subjects(std::string_view constraint) const;

  // Tables constrained by `constraint` whose subject has key `subject_key`.
  // Null when there are none.
  const std::set<std::string>* Tables(std::string_view constraint,
                                      std::string_view subject_key) const;

  bool empty() const { return subjects_.empty(); }
  std::size_t size() const { return subjects_.size(); }
  const std::map<std::string, std::set<std::string>, std::less<>>& subjects()
      const {
    return subjects_;
  }

  friend bool operator==(const ConsMap&, const ConsMap&) = default;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> subjects_;
  std::map<std::string, std::map<std::string, std::set<std::string>, std::less<>>,
           std::less<>>
      tables_;
};

}  // namespace catmine::sampler

#endif  // CATMINE_SAMPLER_CONS_MAP_H_
