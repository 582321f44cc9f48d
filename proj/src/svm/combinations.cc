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


#include "catmine/svm/combinations.h"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/core/parallel.h"
#include "catmine/svm/problem.h"
#include "catmine/svm/solver.h"

namespace catmine::svm {
namespace {

double ErrorRate(const SvmModel& model, const sampler::SampleSet& set,
                 Label truth) {
  const auto& samples =
      truth == Label::kInteresting ? set.interesting : set.non_interesting;
  std::size_t wrong = 0;
  for (const auto& s : samples) {
    if (Predict(model, s.features).label != truth) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(samples.size());
}

std::tuple<double, double> Key(const SubfileResult& r, SelectionRule rule) {
  const double worst = std::max(r.err_pos, r.err_neg);
  const double sum = r.err_pos + r.err_neg;
  return rule == SelectionRule::kMaxThenSum ? std::make_tuple(worst, sum)
                                            : std::make_tuple(sum, worst);
}

SubfileResult RunTask(const sampler::SampleSet& subfile, std::size_t index,
                      FeatureMask mask, const sampler::SampleSet& test_pos,
                      const sampler::SampleSet& test_neg,
                      const CombinationOptions& options) {
  SubfileResult r;
  r.subfile = index;
  const Problem problem = MakeProblem(subfile, mask);
  GridOptions grid_options = options.grid_options;
  grid_options.jobs = 1;
  try {
    r.grid = GridSearchCv(problem, options.grid, grid_options);
    r.model = TrainNuSvm(problem, r.grid.best_nu, r.grid.best_gamma,
                         grid_options.train);
  } catch (const ConvergenceError& e) {
    r.model.reset();
    r.failure = e.what();
    r.no_convergence = true;
    return r;
  } catch (const DataError& e) {
    r.model.reset();
    r.failure = e.what();
    return r;
  }
  r.err_pos = ErrorRate(*r.model, test_pos, Label::kInteresting);
  r.err_neg = ErrorRate(*r.model, test_neg, Label::kNonInteresting);
  return r;
}

}  // namespace

std::vector<FeatureMask> AllMasks() {
  std::vector<FeatureMask> masks;
  for (unsigned bits = 1; bits < (1u << kNumMeasures); ++bits) {
    masks.emplace_back(static_cast<std::uint8_t>(bits));
  }
  return masks;
}

CombinationSearch SearchFeatureCombinations(
    const std::vector<sampler::SampleSet>& subfiles,
    const sampler::SampleSet& test_pos, const sampler::SampleSet& test_neg,
    const CombinationOptions& options) {
  if (subfiles.empty()) throw UsageError("need at least one subfile");
  if (test_pos.interesting.empty() || test_neg.non_interesting.empty()) {
    throw DataError("held-out positive and negative sets must be non-empty");
  }
  for (std::size_t i = 0; i < subfiles.size(); ++i) {
    const std::size_t smaller =
        std::min(subfiles[i].interesting.size(), subfiles[i].non_interesting.size());
    if (static_cast<std::size_t>(options.grid.folds) > smaller) {
      throw DataError(fmt::format(
          "subfile {}: {} folds requested but the smaller class has {} samples",
          i + 1, options.grid.folds, smaller));
    }
  }
  std::vector<FeatureMask> masks = options.masks.empty() ? AllMasks() : options.masks;
  for (const auto m : masks) {
    if (m.empty()) throw UsageError("feature mask selects no measure");
  }

  const std::size_t per_mask = subfiles.size();
  std::vector<SubfileResult> results(masks.size() * per_mask);
  ParallelFor(results.size(), options.grid_options.jobs, [&](std::size_t t) {
    const std::size_t m = t / per_mask, f = t % per_mask;
    results[t] = RunTask(subfiles[f], f, masks[m], test_pos, test_neg, options);
  });

  CombinationSearch search;
  for (std::size_t m = 0; m < masks.size(); ++m) {
    ComboResult combo;
    combo.mask = masks[m];
    for (std::size_t f = 0; f < per_mask; ++f) {
      combo.subfiles.push_back(std::move(results[m * per_mask + f]));
      const auto& r = combo.subfiles.back();
      if (!r.model) continue;
      if (!combo.best || Key(r, options.rule) < Key(combo.subfiles[*combo.best], options.rule)) {
        combo.best = f;
      }
    }
    search.combos.push_back(std::move(combo));
  }

  for (std::size_t m = 0; m < search.combos.size(); ++m) {
    const auto& c = search.combos[m];
    if (!c.best) continue;
    if (!search.final_combo) {
      search.final_combo = m;
      continue;
    }
    const auto& cur = search.combos[*search.final_combo];
    const auto a = std::make_tuple(Key(c.subfiles[*c.best], options.rule),
                                   c.mask.count(), c.mask.bits());
    const auto b = std::make_tuple(Key(cur.subfiles[*cur.best], options.rule),
                                   cur.mask.count(), cur.mask.bits());
    if (a < b) search.final_combo = m;
  }
  return search;
}

std::string CombinationReportCsv(const CombinationSearch& search) {
  std::string out =
      "mask,features,subfile,nu,gamma,status,cv_pos_accuracy,cv_neg_accuracy,"
      "cv_balanced_accuracy,selected_nu,selected_gamma,err_pos,err_neg,"
      "best_for_mask,final\n";
  for (std::size_t m = 0; m < search.combos.size(); ++m) {
    const auto& combo = search.combos[m];
    for (std::size_t f = 0; f < combo.subfiles.size(); ++f) {
      const auto& r = combo.subfiles[f];
      const bool best = combo.best && *combo.best == f;
      const bool final = best && search.final_combo && *search.final_combo == m;
      std::string tail;
      if (r.model) {
        tail = fmt::format("{:.6g},{:.6g},{:.6f},{:.6f},{},{}", r.grid.best_nu,
                           r.grid.best_gamma, r.err_pos, r.err_neg,
                           best ? 1 : 0, final ? 1 : 0);
      } else {
        tail = ",,,,0,0";
      }
      for (const auto& c : r.grid.cells) {
        out += fmt::format("{},{},{},{:.6g},{:.6g},{},", combo.mask.ToString(),
                           combo.mask.Describe(), r.subfile + 1, c.nu, c.gamma,
                           CellStatusName(c.status));
        if (c.status == CellStatus::kOk) {
          out += fmt::format("{:.6f},{:.6f},{:.6f},", c.pos_accuracy,
                             c.neg_accuracy, c.balanced_accuracy);
        } else {
          out += ",,,";
        }
        out += tail + "\n";
      }
    }
  }
  return out;
}

}  // namespace catmine::svm
