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


#include "catmine/svm/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "catmine/core/error.h"
#include "catmine/svm/kernel_cache.h"

namespace catmine::svm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTau = 1e-12;

// Works on the rescaled dual a' = n * a, so every bound is [0, 1] and the
// class sums start at nu * n / 2 each. Q has a unit diagonal (RBF).
class NuSolver {
 public:
  NuSolver(const Problem& problem, double nu, double gamma,
           const TrainOptions& options)
      : p_(problem),
        n_(problem.size()),
        options_(options),
        cache_(problem, gamma, options.cache_bytes),
        alpha_(n_, 0.0),
        grad_(n_, 0.0) {
    double sum_pos = nu * static_cast<double>(n_) / 2.0;
    double sum_neg = sum_pos;
    for (std::size_t i = 0; i < n_; ++i) {
      double& budget = p_.y[i] > 0 ? sum_pos : sum_neg;
      alpha_[i] = std::min(1.0, budget);
      budget -= alpha_[i];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha_[i] == 0.0) continue;
      const auto q = cache_.Column(i);
      for (std::size_t k = 0; k < n_; ++k) grad_[k] += alpha_[i] * q[k];
    }
  }

  void Solve() {
    while (true) {
      std::size_t i = 0, j = 0;
      if (!SelectWorkingSet(i, j)) return;
      if (iterations_ >= options_.max_iterations) {
        throw ConvergenceError(
            fmt::format("nu-SVM did not converge within {} iterations "
                        "(KKT residual {:.3g})",
                        options_.max_iterations, residual_),
            residual_);
      }
      ++iterations_;
      Update(i, j);
    }
  }

  // Returns (r1, r2): the gradient level of free points in each class.
  std::pair<double, double> Levels() const {
    double ub[2] = {kInf, kInf}, lb[2] = {-kInf, -kInf}, sum[2] = {0, 0};
    int free[2] = {0, 0};
    for (std::size_t i = 0; i < n_; ++i) {
      const int c = p_.y[i] > 0 ? 0 : 1;
      if (AtUpper(i)) {
        lb[c] = std::max(lb[c], grad_[i]);
      } else if (AtLower(i)) {
        ub[c] = std::min(ub[c], grad_[i]);
      } else {
        ++free[c];
        sum[c] += grad_[i];
      }
    }
    double r[2];
    for (int c = 0; c < 2; ++c) {
      if (free[c] > 0) {
        r[c] = sum[c] / free[c];
      } else if (std::isfinite(ub[c]) && std::isfinite(lb[c])) {
        r[c] = (ub[c] + lb[c]) / 2.0;
      } else if (std::isfinite(ub[c])) {
        r[c] = ub[c];
      } else {
        r[c] = std::isfinite(lb[c]) ? lb[c] : 0.0;
      }
    }
    return {r[0], r[1]};
  }

  double Objective() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < n_; ++i) sum += alpha_[i] * grad_[i];
    return sum / 2.0;
  }

  const std::vector<double>& alpha() const { return alpha_; }
  std::int64_t iterations() const { return iterations_; }

 private:
  bool AtUpper(std::size_t i) const { return alpha_[i] >= 1.0; }
  bool AtLower(std::size_t i) const { return alpha_[i] <= 0.0; }

  // Second-order selection restricted to pairs of the same class.
  bool SelectWorkingSet(std::size_t& out_i, std::size_t& out_j) {
    double gmaxp = -kInf, gmaxn = -kInf;
    std::size_t ip = n_, in = n_;
    for (std::size_t t = 0; t < n_; ++t) {
      if (p_.y[t] > 0) {
        if (!AtUpper(t) && -grad_[t] >= gmaxp) {
          gmaxp = -grad_[t];
          ip = t;
        }
      } else if (!AtLower(t) && grad_[t] >= gmaxn) {
        gmaxn = grad_[t];
        in = t;
      }
    }
    std::span<const double> qp, qn;
    if (ip != n_) qp = cache_.Column(ip);
    if (in != n_) qn = cache_.Column(in);

    double gmaxp2 = -kInf, gmaxn2 = -kInf, best = kInf;
    std::size_t jmin = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (p_.y[j] > 0) {
        if (AtLower(j)) continue;
        gmaxp2 = std::max(gmaxp2, grad_[j]);
        const double diff = gmaxp + grad_[j];
        if (diff > 0) {
          const double quad = 2.0 - 2.0 * qp[j];
          const double obj = -diff * diff / (quad > 0 ? quad : kTau);
          if (obj <= best) {
            best = obj;
            jmin = j;
          }
        }
      } else {
        if (AtUpper(j)) continue;
        gmaxn2 = std::max(gmaxn2, -grad_[j]);
        const double diff = gmaxn - grad_[j];
        if (diff > 0) {
          const double quad = 2.0 - 2.0 * qn[j];
          const double obj = -diff * diff / (quad > 0 ? quad : kTau);
          if (obj <= best) {
            best = obj;
            jmin = j;
          }
        }
      }
    }
    residual_ = std::max(gmaxp + gmaxp2, gmaxn + gmaxn2);
    if (residual_ < options_.eps || jmin == n_) return false;
    out_i = p_.y[jmin] > 0 ? ip : in;
    out_j = jmin;
    return true;
  }

  void Update(std::size_t i, std::size_t j) {
    const auto qi = cache_.Column(i);
    const auto qj = cache_.Column(j);
    const double old_i = alpha_[i], old_j = alpha_[j];

    double quad = 2.0 - 2.0 * qi[j];
    if (quad <= 0) quad = kTau;
    // Same class, so a_i + a_j is conserved.
    const double delta = (grad_[i] - grad_[j]) / quad;
    const double sum = old_i + old_j;
    double ai = old_i - delta, aj = old_j + delta;
    if (sum > 1.0) {
      if (ai > 1.0) {
        ai = 1.0;
        aj = sum - 1.0;
      }
    } else if (aj < 0.0) {
      aj = 0.0;
      ai = sum;
    }
    if (sum > 1.0) {
      if (aj > 1.0) {
        aj = 1.0;
        ai = sum - 1.0;
      }
    } else if (ai < 0.0) {
      ai = 0.0;
      aj = sum;
    }
    alpha_[i] = ai;
    alpha_[j] = aj;

    const double di = ai - old_i, dj = aj - old_j;
    for (std::size_t k = 0; k < n_; ++k) grad_[k] += qi[k] * di + qj[k] * dj;
  }

  const Problem& p_;
  std::size_t n_;
  TrainOptions options_;
  KernelCache cache_;
  std::vector<double> alpha_;
  std::vector<double> grad_;
  std::int64_t iterations_ = 0;
  double residual_ = kInf;
};

}  // namespace

double NuUpperBound(const Problem& problem) {
  if (problem.size() == 0) return 0.0;
  const double smaller = static_cast<double>(
      std::min(problem.positives(), problem.negatives()));
  return 2.0 * smaller / static_cast<double>(problem.size());
}

SvmModel TrainNuSvm(const Problem& problem, double nu, double gamma,
                    const TrainOptions& options) {
  if (problem.size() < 2) throw DataError("need at least two training samples");
  if (problem.positives() == 0 || problem.negatives() == 0) {
    throw DataError("training data must contain both classes");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DataError(fmt::format("gamma must be positive, got {}", gamma));
  }
  if (!(nu > 0.0)) throw DataError(fmt::format("nu must be positive, got {}", nu));
  const double bound = NuUpperBound(problem);
  if (nu > bound + 1e-12) {
    throw DataError(fmt::format(
        "nu exceeds class-balance bound ({} > {:.6g})", nu, bound));
  }

  NuSolver solver(problem, nu, gamma, options);
  solver.Solve();

  const double n = static_cast<double>(problem.size());
  const auto [r1, r2] = solver.Levels();
  SvmModel model;
  model.mask = problem.mask;
  model.nu = nu;
  model.gamma = gamma;
  model.bias = -(r1 - r2) / (2.0 * n);
  model.rho = (r1 + r2) / (2.0 * n);
  model.n_train = problem.size();
  model.objective = solver.Objective() / (n * n);
  model.iterations = solver.iterations();
  const auto& alpha = solver.alpha();
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (alpha[i] <= 0.0) continue;
    model.support_vectors.push_back(problem.x[i]);
    model.dual_coeffs.push_back(alpha[i] * problem.y[i] / n);
  }
  return model;
}

}  // namespace catmine::svm
