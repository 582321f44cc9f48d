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


#include "support/synthetic.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "catmine/core/error.h"

namespace catmine::testing {

std::string DataPath(std::string_view name) {
  return std::string(CATMINE_TEST_DATA_DIR) + "/" + std::string(name);
}

std::map<LabelKey, Label> ReadExpectedLabels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<LabelKey, Label> out;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    const auto label = ParseLabel(line.substr(t2 + 1));
    if (t1 == std::string::npos || t2 == std::string::npos || !label) {
      throw std::runtime_error("bad label line: " + line);
    }
    out[{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1)}] = *label;
  }
  return out;
}

svm::Problem RandomProblem(Rng& rng, std::size_t n, std::size_t dim) {
  svm::Problem p;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(dim);
    for (auto& v : x) v = rng.UniformUnit();
    p.x.push_back(std::move(x));
    p.y.push_back(rng.UniformBelow(2) ? 1 : -1);
  }
  p.y[0] = 1;
  p.y[n - 1] = -1;
  return p;
}

svm::Problem SeparableProblem(Rng& rng, std::size_t n, std::size_t dim) {
  svm::Problem p;
  for (std::size_t i = 0; i < n; ++i) {
    const bool pos = i % 2 == 0;
    std::vector<double> x(dim);
    for (auto& v : x) v = (pos ? 0.0 : 0.7) + 0.3 * rng.UniformUnit();
    p.x.push_back(std::move(x));
    p.y.push_back(pos ? 1 : -1);
  }
  return p;
}

std::int64_t SamplePoisson(Rng& rng, double lambda) {
  const double limit = std::exp(-lambda);
  std::int64_t k = 0;
  double prod = rng.UniformUnit();
  while (prod > limit) {
    ++k;
    prod *= rng.UniformUnit();
  }
  return k;
}

}  // namespace catmine::testing
