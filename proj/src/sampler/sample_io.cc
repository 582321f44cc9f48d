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


#include "catmine/sampler/sample_io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "json.hpp"

namespace catmine::sampler {
namespace {

using nlohmann::json;

json SampleToJson(const Sample& s) {
  json features = json::array();
  for (const double v : s.features.values) features.push_back(v);
  json obj;
  obj["table_id"] = s.table_id;
  obj["subject"] = s.subject;
  obj["attribute"] = s.attribute;
  obj["label"] = std::string(LabelName(s.label));
  obj["features"] = std::move(features);
  obj["degenerate"] = s.features.degenerate;
  obj["witness"] = s.witness ? json(*s.witness) : json(nullptr);
  return obj;
}

std::string Where(std::string_view source, std::size_t line) {
  return fmt::format("{}:{}", source, line);
}

const json& Field(const json& obj, const char* key, std::string_view where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw DataError(fmt::format("{}: missing field '{}'", where, key));
  }
  return *it;
}

std::string StringField(const json& obj, const char* key, std::string_view where) {
  const json& v = Field(obj, key, where);
  if (!v.is_string()) {
    throw DataError(fmt::format("{}: field '{}' must be a string", where, key));
  }
  return v.get<std::string>();
}

Sample SampleFromJson(const json& obj, std::string_view where) {
  Sample s;
  s.subject = StringField(obj, "subject", where);
  s.attribute = StringField(obj, "attribute", where);
  if (const auto it = obj.find("table_id"); it != obj.end()) {
    if (!it->is_string()) {
      throw DataError(fmt::format("{}: field 'table_id' must be a string", where));
    }
    s.table_id = it->get<std::string>();
  }
  const auto label = ParseLabel(StringField(obj, "label", where));
  if (!label) throw DataError(fmt::format("{}: unknown label", where));
  s.label = *label;

  const json& features = Field(obj, "features", where);
  if (!features.is_array() || features.size() != kNumMeasures) {
    throw DataError(fmt::format("{}: 'features' must hold {} numbers", where,
                                kNumMeasures));
  }
  for (std::size_t i = 0; i < kNumMeasures; ++i) {
    if (!features[i].is_number()) {
      throw DataError(fmt::format("{}: features[{}] is not a number", where, i));
    }
    const double v = features[i].get<double>();
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DataError(fmt::format("{}: features[{}] = {} outside [0, 1]", where, i, v));
    }
    s.features.values[i] = v;
  }
  if (const auto it = obj.find("degenerate"); it != obj.end()) {
    if (!it->is_number_unsigned() || it->get<unsigned>() > 0x7f) {
      throw DataError(fmt::format("{}: bad 'degenerate' bits", where));
    }
    s.features.degenerate = static_cast<std::uint8_t>(it->get<unsigned>());
  }
  if (const auto it = obj.find("witness"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw DataError(fmt::format("{}: field 'witness' must be a string", where));
    }
    s.witness = it->get<std::string>();
  }
  return s;
}

}  // namespace

std::string WriteSamplesJsonl(const SampleSet& samples) {
  std::string out;
  json prov;
  prov["corpus_hash"] = samples.provenance.corpus_hash;
  prov["seed"] = samples.provenance.seed ? json(*samples.provenance.seed)
                                         : json(nullptr);
  out += json{{"provenance", prov}}.dump() + "\n";
  for (const auto* list : {&samples.interesting, &samples.non_interesting}) {
    for (const auto& s : *list) out += SampleToJson(s).dump() + "\n";
  }
  return out;
}

SampleSet ParseSamplesJsonl(std::string_view text, std::string_view source) {
  SampleSet set;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = Where(source, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error&) {
      throw DataError(where + ": invalid JSON");
    }
    if (!obj.is_object()) throw DataError(where + ": expected an object");
    if (const auto it = obj.find("provenance"); it != obj.end()) {
      const json& p = *it;
      if (!p.is_object()) throw DataError(where + ": bad provenance");
      set.provenance.corpus_hash = p.value("corpus_hash", std::string());
      if (const auto seed = p.find("seed"); seed != p.end() && !seed->is_null()) {
        if (!seed->is_number_unsigned()) throw DataError(where + ": bad seed");
        set.provenance.seed = seed->get<std::uint64_t>();
      }
      continue;
    }
    set.Add(SampleFromJson(obj, where));
  }
  return set;
}

SampleSet ReadSamplesFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSamplesJsonl(buf.str(), path.string());
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError(path.string() + ": write failed");
}

std::string WriteSparse(const SampleSet& samples, FeatureMask mask) {
  std::string out;
  for (const auto* list : {&samples.interesting, &samples.non_interesting}) {
    for (const auto& s : *list) {
      out += s.label == Label::kInteresting ? "+1" : "-1";
      for (const std::size_t slot : mask.Slots()) {
        out += fmt::format(" {}:{:.17g}", slot + 1, s.features.values[slot]);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace catmine::sampler
