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


#include "catmine/sampler/cons_map.h"

#include "catmine/ingest/text.h"

namespace catmine::sampler {

std::string SubjectKey(std::string_view subject) {
  return ingest::StemPhrase(subject);
}

ConsMap ConsMap::Build(const std::vector<TableRecord>& corpus) {
  ConsMap map;
  for (const auto& table : corpus) {
    if (table.subject.empty()) continue;
    for (const auto& constraint : table.metadata.constraints) {
      map.Add(constraint, table.subject, table.id);
    }
  }
  return map;
}

void ConsMap::Add(const std::string& constraint, const std::string& subject,
                  const std::string& table_id) {
  if (constraint.empty()) return;
  subjects_[constraint].insert(subject);
  tables_[constraint][SubjectKey(subject)].insert(table_id);
}

void ConsMap::Merge(const ConsMap& other) {
  for (const auto& [constraint, subjects] : other.subjects_) {
    subjects_[constraint].insert(subjects.begin(), subjects.end());
  }
  for (const auto& [constraint, by_key] : other.tables_) {
    auto& mine = tables_[constraint];
    for (const auto& [key, ids] : by_key) mine[key].insert(ids.begin(), ids.end());
  }
}

std::vector<std::string> ConsMap::Subjects(std::string_view constraint) const {
  const auto it = subjects_.find(constraint);
  if (it == subjects_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

const std::set<std::string>* ConsMap::Tables(std::string_view constraint,
                                             std::string_view subject_key) const {
  const auto it = tables_.find(constraint);
  if (it == tables_.end()) return nullptr;
  const auto jt = it->second.find(subject_key);
  return jt == it->second.end() ? nullptr : &jt->second;
}

}  // namespace catmine::sampler
