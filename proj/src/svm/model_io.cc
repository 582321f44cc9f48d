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


#include "catmine/svm/model_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "json.hpp"

namespace catmine::svm {
namespace {

using nlohmann::json;

constexpr std::string_view kFormatName = "catmine-nu-svm";

std::string Real(double v) { return fmt::format("{:.17g}", v); }

std::string RealList(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += Real(values[i]);
  }
  return out + "]";
}

const json& Require(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw DataError(fmt::format("model: missing field '{}'", key));
  return *it;
}

double RequireReal(const json& obj, const char* key) {
  const json& v = Require(obj, key);
  if (!v.is_number()) throw DataError(fmt::format("model: '{}' must be a number", key));
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw DataError(fmt::format("model: '{}' is not finite", key));
  return d;
}

std::vector<double> RequireReals(const json& v, std::string_view what) {
  if (!v.is_array()) throw DataError(fmt::format("model: {} must be an array", what));
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw DataError(fmt::format("model: {} holds a non-number", what));
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

std::string SerializeModel(const SvmModel& model) {
  std::string out = "{\n";
  out += fmt::format("  \"format\": \"{}\",\n", kFormatName);
  out += fmt::format("  \"version\": {},\n", kModelFormatVersion);
  out += fmt::format("  \"feature_mask\": \"{}\",\n", model.mask.ToString());
  out += fmt::format("  \"features\": {},\n", json(model.mask.Describe()).dump());
  out += "  \"label_map\": {\"+1\": \"interesting\", \"-1\": \"non_interesting\"},\n";
  out += fmt::format("  \"nu\": {},\n", Real(model.nu));
  out += fmt::format("  \"gamma\": {},\n", Real(model.gamma));
  out += fmt::format("  \"bias\": {},\n", Real(model.bias));
  out += fmt::format("  \"rho\": {},\n", Real(model.rho));
  out += fmt::format("  \"n_train\": {},\n", model.n_train);
  out += fmt::format("  \"objective\": {},\n", Real(model.objective));
  out += fmt::format("  \"iterations\": {},\n", model.iterations);
  out += "  \"support_vectors\": [";
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += fmt::format("    {{\"coef\": {}, \"x\": {}}}", Real(model.dual_coeffs[i]),
                       RealList(model.support_vectors[i]));
  }
  out += "\n  ]\n}\n";
  return out;
}

SvmModel DeserializeModel(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(fmt::format("model: invalid JSON at byte {}", e.byte));
  }
  if (!doc.is_object()) throw DataError("model: expected a JSON object");
  const json& format = Require(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kFormatName) {
    throw DataError("model: not a catmine model file");
  }
  const json& version = Require(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kModelFormatVersion) {
    throw DataError(fmt::format("model: unsupported version {} (expected {})",
                                version.dump(), kModelFormatVersion));
  }

  SvmModel m;
  const json& mask_text = Require(doc, "feature_mask");
  const auto mask =
      mask_text.is_string() ? FeatureMask::Parse(mask_text.get<std::string>())
                            : std::nullopt;
  if (!mask || mask->empty()) throw DataError("model: bad feature_mask");
  m.mask = *mask;
  m.nu = RequireReal(doc, "nu");
  m.gamma = RequireReal(doc, "gamma");
  m.bias = RequireReal(doc, "bias");
  m.rho = RequireReal(doc, "rho");
  m.objective = RequireReal(doc, "objective");
  const json& n_train = Require(doc, "n_train");
  const json& iterations = Require(doc, "iterations");
  if (!n_train.is_number_unsigned() || !iterations.is_number_integer()) {
    throw DataError("model: n_train and iterations must be integers");
  }
  m.n_train = n_train.get<std::size_t>();
  m.iterations = iterations.get<std::int64_t>();
  if (!(m.gamma > 0.0)) throw DataError("model: gamma must be positive");

  const json& svs = Require(doc, "support_vectors");
  if (!svs.is_array()) throw DataError("model: support_vectors must be an array");
  if (svs.empty()) throw DataError("model: no support vectors");
  const auto dim = static_cast<std::size_t>(m.mask.count());
  for (std::size_t i = 0; i < svs.size(); ++i) {
    const json& sv = svs[i];
    if (!sv.is_object()) throw DataError("model: support vector is not an object");
    m.dual_coeffs.push_back(RequireReal(sv, "coef"));
    auto x = RequireReals(Require(sv, "x"), "support vector");
    if (x.size() != dim) {
      throw DataError(fmt::format(
          "model: support vector {} has {} values, mask selects {}", i,
          x.size(), dim));
    }
    m.support_vectors.push_back(std::move(x));
  }
  return m;
}

SvmModel ReadModelFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return DeserializeModel(buf.str());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace catmine::svm
