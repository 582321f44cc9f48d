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


#include "catmine/svm/grid_search.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/normalize.h"
#include "catmine/core/parallel.h"
#include "catmine/core/rng.h"
#include "catmine/svm/model.h"

namespace catmine::svm {
namespace {

constexpr double kNuStep = 0.05;

double ParseReal(std::string_view text) {
  text = Trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("grid: '{}' is not a number", text));
  }
  return v;
}

// "a,b,c" or "start:stop:step" (inclusive).
std::vector<double> ParseValues(std::string_view text) {
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    const double start = ParseReal(text.substr(0, c1));
    const double stop = ParseReal(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = ParseReal(text.substr(c2 + 1));
    if (!(step > 0.0) || stop < start) throw UsageError("grid: bad range");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long k = 0; k <= count; ++k) out.push_back(start + k * step);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(ParseReal(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

struct Cell {
  double nu;
  double gamma;
};

CvCell EvaluateCell(const Problem& problem, const std::vector<int>& fold_of,
                    int folds, Cell cell, const TrainOptions& train) {
  CvCell out;
  out.nu = cell.nu;
  out.gamma = cell.gamma;
  std::size_t tp = 0, tn = 0, pos = 0, neg = 0;
  for (int f = 0; f < folds; ++f) {
    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t i = 0; i < problem.size(); ++i) {
      (fold_of[i] == f ? test_idx : train_idx).push_back(i);
    }
    const Problem fold_train = problem.Subset(train_idx);
    if (fold_train.positives() == 0 || fold_train.negatives() == 0 ||
        cell.nu > NuUpperBound(fold_train) + 1e-12) {
      out.status = CellStatus::kInfeasible;
      out.fold_accuracies.clear();
      return out;
    }
    SvmModel model;
    try {
      model = TrainNuSvm(fold_train, cell.nu, cell.gamma, train);
    } catch (const ConvergenceError&) {
      out.status = CellStatus::kNoConvergence;
      out.fold_accuracies.clear();
      return out;
    }
    std::size_t correct = 0;
    for (const std::size_t i : test_idx) {
      const bool predicted_pos = DecisionValue(model, problem.x[i]) > 0;
      const bool is_pos = problem.y[i] > 0;
      if (predicted_pos == is_pos) ++correct;
      if (is_pos) {
        ++pos;
        tp += predicted_pos;
      } else {
        ++neg;
        tn += !predicted_pos;
      }
    }
    out.fold_accuracies.push_back(
        test_idx.empty() ? 0.0 : static_cast<double>(correct) / test_idx.size());
  }
  out.pos_accuracy = pos ? static_cast<double>(tp) / pos : 0.0;
  out.neg_accuracy = neg ? static_cast<double>(tn) / neg : 0.0;
  out.balanced_accuracy = (out.pos_accuracy + out.neg_accuracy) / 2.0;
  return out;
}

// True when a beats b.
bool Better(const CvCell& a, const CvCell& b) {
  if (a.balanced_accuracy != b.balanced_accuracy) {
    return a.balanced_accuracy > b.balanced_accuracy;
  }
  if (a.nu != b.nu) return a.nu < b.nu;
  return a.gamma < b.gamma;
}

const CvCell* BestCell(const std::vector<CvCell>& cells) {
  const CvCell* best = nullptr;
  for (const auto& c : cells) {
    if (c.status != CellStatus::kOk) continue;
    if (best == nullptr || Better(c, *best)) best = &c;
  }
  return best;
}

void EvaluateAll(const Problem& problem, const std::vector<int>& fold_of,
                 int folds, const std::vector<Cell>& cells,
                 const GridOptions& options, std::vector<CvCell>& out) {
  const std::size_t base = out.size();
  out.resize(base + cells.size());
  ParallelFor(cells.size(), options.jobs, [&](std::size_t i) {
    out[base + i] = EvaluateCell(problem, fold_of, folds, cells[i], options.train);
  });
}

}  // namespace

GridSpec DefaultGrid() {
  GridSpec g;
  for (int k = 1; k <= 15; ++k) g.nu_values.push_back(k * kNuStep);
  for (int e = -5; e <= 2; ++e) g.gamma_values.push_back(std::pow(10.0, e));
  g.folds = 5;
  g.refine = true;
  return g;
}

GridSpec ParseGridSpec(std::string_view text) {
  text = Trim(text);
  if (text == "default") return DefaultGrid();
  GridSpec g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    const std::string_view part = Trim(text.substr(pos, semi - pos));
    pos = semi + 1;
    if (part.empty()) continue;
    if (part == "refine") {
      g.refine = true;
      continue;
    }
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(fmt::format("grid: expected key=values, got '{}'", part));
    }
    const std::string_view key = Trim(part.substr(0, eq));
    const std::string_view values = part.substr(eq + 1);
    if (key == "nu") {
      g.nu_values = ParseValues(values);
    } else if (key == "gamma") {
      g.gamma_values = ParseValues(values);
    } else if (key == "folds") {
      g.folds = static_cast<int>(ParseReal(values));
    } else {
      throw UsageError(fmt::format("grid: unknown key '{}'", key));
    }
  }
  return g;
}

std::string_view CellStatusName(CellStatus status) {
  switch (status) {
    case CellStatus::kOk:
      return "ok";
    case CellStatus::kInfeasible:
      return "infeasible";
    case CellStatus::kNoConvergence:
      return "no_convergence";
  }
  return "unknown";
}

std::vector<int> StratifiedFolds(const std::vector<int>& y, int folds,
                                 std::uint64_t seed) {
  std::vector<int> fold_of(y.size(), 0);
  Rng rng(seed);
  for (const int cls : {1, -1}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == cls) idx.push_back(i);
    }
    rng.Shuffle(std::span<std::size_t>(idx));
    for (std::size_t p = 0; p < idx.size(); ++p) {
      fold_of[idx[p]] = static_cast<int>(p % static_cast<std::size_t>(folds));
    }
  }
  return fold_of;
}

GridResult GridSearchCv(const Problem& problem, const GridSpec& grid,
                        const GridOptions& options) {
  if (grid.nu_values.empty() || grid.gamma_values.empty()) {
    throw UsageError("grid: empty grid");
  }
  if (grid.folds < 2) throw UsageError("grid: need at least 2 folds");
  for (const double nu : grid.nu_values) {
    if (!(nu > 0.0 && nu <= 1.0)) throw UsageError(fmt::format("grid: nu {} outside (0, 1]", nu));
  }
  for (const double gamma : grid.gamma_values) {
    if (!(gamma > 0.0)) throw UsageError(fmt::format("grid: gamma {} not positive", gamma));
  }
  const std::size_t smaller = std::min(problem.positives(), problem.negatives());
  if (static_cast<std::size_t>(grid.folds) > smaller) {
    throw DataError(fmt::format(
        "{} folds requested but the smaller class has {} samples", grid.folds,
        smaller));
  }

  const auto fold_of = StratifiedFolds(problem.y, grid.folds, options.seed);
  std::vector<Cell> cells;
  for (const double nu : grid.nu_values) {
    for (const double gamma : grid.gamma_values) cells.push_back({nu, gamma});
  }
  GridResult result;
  EvaluateAll(problem, fold_of, grid.folds, cells, options, result.cells);

  if (grid.refine) {
    if (const CvCell* best = BestCell(result.cells)) {
      const double step = kNuStep / 2.0;
      const double factor = std::sqrt(10.0);
      std::vector<Cell> fine;
      for (const double nu : {best->nu - step, best->nu, best->nu + step}) {
        if (!(nu > 0.0 && nu <= 1.0)) continue;
        for (const double gamma :
             {best->gamma / factor, best->gamma, best->gamma * factor}) {
          const bool seen = std::any_of(
              result.cells.begin(), result.cells.end(), [&](const CvCell& c) {
                return std::abs(c.nu - nu) < 1e-12 &&
                       std::abs(c.gamma - gamma) <= 1e-12 * gamma;
              });
          if (!seen) fine.push_back({nu, gamma});
        }
      }
      EvaluateAll(problem, fold_of, grid.folds, fine, options, result.cells);
    }
  }

  const CvCell* best = BestCell(result.cells);
  if (best == nullptr) {
    const bool any_stall = std::any_of(
        result.cells.begin(), result.cells.end(),
        [](const CvCell& c) { return c.status == CellStatus::kNoConvergence; });
    if (any_stall) {
      throw ConvergenceError("grid search: no cell converged", 0.0);
    }
    throw DataError("grid search: every nu in the grid is infeasible");
  }
  result.best_nu = best->nu;
  result.best_gamma = best->gamma;
  result.best_score = best->balanced_accuracy;
  return result;
}

std::string CvTableCsv(const GridResult& result, FeatureMask mask,
                       std::string_view prefix_header, std::string_view prefix) {
  std::size_t folds = 0;
  for (const auto& c : result.cells) folds = std::max(folds, c.fold_accuracies.size());
  std::string out;
  if (!prefix_header.empty()) out += fmt::format("{},", prefix_header);
  out += "mask,nu,gamma,status";
  for (std::size_t f = 0; f < folds; ++f) out += fmt::format(",fold{}_accuracy", f + 1);
  out += ",pos_accuracy,neg_accuracy,balanced_accuracy\n";
  for (const auto& c : result.cells) {
    if (!prefix.empty()) out += fmt::format("{},", prefix);
    out += fmt::format("{},{:.6g},{:.6g},{}", mask.ToString(), c.nu, c.gamma,
                       CellStatusName(c.status));
    for (std::size_t f = 0; f < folds; ++f) {
      out += f < c.fold_accuracies.size()
                 ? fmt::format(",{:.6f}", c.fold_accuracies[f])
                 : std::string(",");
    }
    if (c.status == CellStatus::kOk) {
      out += fmt::format(",{:.6f},{:.6f},{:.6f}\n", c.pos_accuracy,
                         c.neg_accuracy, c.balanced_accuracy);
    } else {
      out += ",,,\n";
    }
  }
  return out;
}

}  // namespace catmine::svm
