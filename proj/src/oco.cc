// Copyright 2026 The cfroco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfroco/oco.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "cfroco/cfr.h"
#include "cfroco/local_minimizers.h"

namespace cfroco {

namespace {

constexpr double kAssumptionTolerance = 1e-9;

long double SquaredNorm(std::span<const double> v) {
  long double s = 0.0L;
  for (long double e : v) s += e * e;
  return s;
}

bool CfrSchedule(BetaSchedule s) {
  return s == BetaSchedule::kFtrlCfr || s == BetaSchedule::kOmdCfr;
}

}  // namespace

std::vector<double> DepthFactors(const Treeplex& tp) {
  std::vector<double> factor(tp.num_decision_points());
  for (const auto& j : tp.decision_points()) {
    double best = 0.0;
    for (const auto& children : j.children) {
      double sum = 0.0;
      for (int c : children) sum += factor[c];
      best = std::max(best, sum);
    }
    factor[j.id] = 2.0 + best;
  }
  return factor;
}

std::vector<double> NonadaptiveBetas(const Treeplex& tp, double scale,
                                     double loss_bound, int horizon) {
  if (!(scale > 0.0) || !(loss_bound > 0.0) || horizon < 1) {
    throw std::invalid_argument("non-adaptive weights need positive inputs");
  }
  std::vector<double> beta = DepthFactors(tp);
  const double c = scale * loss_bound * std::sqrt(static_cast<double>(horizon));
  for (double& b : beta) b *= c;
  return beta;
}

OcoSolver::OcoSolver(const Treeplex& tp, OcoOptions options)
    : tp_(tp),
      options_(options),
      strategy_(BehavioralStrategy::Uniform(tp)),
      cumulative_(tp.num_sequences(), 0.0L),
      loss_(tp.num_sequences(), 0.0L),
      cf_cumulative_(tp.num_sequences(), 0.0L),
      cf_cumulative_values_(tp.num_decision_points(), 0.0L),
      f_(tp.num_decision_points(), 0.0L),
      v_(tp.max_actions()) {
  if (CfrSchedule(options_.schedule)) {
    if (!(options_.epsilon > 0.0)) {
      throw std::invalid_argument("epsilon initialization must be positive");
    }
    shadow_ = EpsilonInitialRegrets(tp, options_.epsilon);
    beta_.resize(tp.num_decision_points());
    for (const auto& j : tp.decision_points()) {
      double s = 0.0;
      for (double e : shadow_.slice(j)) s += e;
      beta_[j.id] = s;
    }
    // Each child value F_j' carries an extra epsilon / sqrt(n_j') relative
    // to the cumulative counterfactual value; the initial cumulative loss
    // cancels it so that [L]_j + g_j tracks the counterfactual loss exactly.
    if (options_.schedule == BetaSchedule::kFtrlCfr &&
        options_.method == OcoMethod::kFtrl) {
      for (const auto& j : tp.decision_points()) {
        for (int a = 0; a < j.num_actions; ++a) {
          for (int c : j.children[a]) {
            cumulative_[j.slot(a)] -=
                static_cast<long double>(options_.epsilon) /
                std::sqrt(static_cast<long double>(tp.point(c).num_actions));
          }
        }
      }
    }
    beta_prev_ = beta_;
  } else {
    beta_ = NonadaptiveBetas(tp, options_.scale, options_.loss_bound,
                             options_.horizon);
    beta_prev_ = beta_;
    Pass(loss_, /*first=*/true);
  }
}

std::vector<double> OcoSolver::f_values() const {
  return std::vector<double>(f_.begin(), f_.end());
}

SequenceVector OcoSolver::cumulative_loss() const {
  return SequenceVector(std::vector<double>(cumulative_.begin(), cumulative_.end()));
}

void OcoSolver::Update(const SequenceVector& loss,
                       const SequenceVector* /*cumulative_loss*/) {
  if (static_cast<int>(loss.size()) != tp_.num_sequences()) {
    throw std::invalid_argument("loss does not fit the treeplex");
  }
  if (CfrSchedule(options_.schedule)) {
    ComputeCounterfactualLossesInto(tp_, loss, strategy_, cf_);
    const bool plus = options_.schedule == BetaSchedule::kOmdCfr;
    for (const auto& j : tp_.decision_points()) {
      double norm = 0.0;
      for (int a = 0; a < j.num_actions; ++a) {
        const int s = j.slot(a);
        const double r = cf_.values[j.id] - cf_.action_losses[s];
        shadow_[s] = plus ? std::max(shadow_[s] + r, 0.0) : shadow_[s] + r;
        norm += std::max(shadow_[s], 0.0);
        cf_cumulative_[s] += cf_.action_losses[s];
      }
      cf_cumulative_values_[j.id] += cf_.values[j.id];
      if (!(norm > 0.0)) {
        throw std::runtime_error("shadow regret vanished at a decision point");
      }
      beta_[j.id] = norm;
    }
  }
  ++t_;
  if (options_.method == OcoMethod::kFtrl) {
    for (std::size_t i = 0; i < cumulative_.size(); ++i) {
      cumulative_[i] += loss[i];
    }
    Pass(cumulative_, /*first=*/false);
  } else {
    for (std::size_t i = 0; i < loss_.size(); ++i) loss_[i] = loss[i];
    Pass(loss_, /*first=*/false);
  }
  beta_prev_ = beta_;
}

void OcoSolver::Pass(const std::vector<long double>& linear, bool first) {
  const bool omd = options_.method == OcoMethod::kOmd && !first;
  const bool fd = options_.kind == RegularizerKind::kFutureDepended;
  const bool bridge = !first && options_.method == OcoMethod::kFtrl &&
                      options_.schedule == BetaSchedule::kFtrlCfr;
  f_identity_residual_ = 0.0;
  bridge_residual_ = 0.0;
  for (const auto& j : tp_.decision_points()) {
    std::span<long double> v(v_.data(), j.num_actions);
    std::span<double> x = strategy_.at(j);
    const long double old_sq = SquaredNorm(x);
    const long double b = beta_[j.id];
    const long double b_prev = beta_prev_[j.id];
    for (int a = 0; a < j.num_actions; ++a) {
      long double g = 0.0L;
      for (int c : j.children[a]) g += f_[c];
      v[a] = linear[j.slot(a)] + g;
      if (bridge) {
        bridge_residual_ =
            std::max(bridge_residual_, static_cast<double>(std::abs(
                                           v[a] - cf_cumulative_[j.slot(a)])));
      }
      if (omd) v[a] -= b_prev * x[a];
    }
    const long double alpha =
        SolveAlphaL1(std::span<const long double>(v), b);
    diag_.max_residual = std::max(
        diag_.max_residual,
        RelativeResidual(static_cast<double>(HingeL1(
                             std::span<const long double>(v), alpha)),
                         beta_[j.id]));
    for (int a = 0; a < j.num_actions; ++a) {
      x[a] = static_cast<double>(std::max(alpha - v[a], 0.0L) / b);
    }
    const long double new_sq = SquaredNorm(x);
    if (fd) {
      f_[j.id] = alpha;
    } else if (omd) {
      f_[j.id] = alpha - 0.5 * b * new_sq + 0.5 * b_prev * old_sq;
    } else {
      f_[j.id] = alpha - 0.5 * b * new_sq;
    }
    if (!first) {
      const long double lhs = b_prev * b_prev * old_sq;
      const long double rhs = b * b * new_sq;
      if (lhs - rhs > kAssumptionTolerance * std::max(1.0L, rhs)) {
        ++diag_.assumption1_violations;
      }
    }
    if (!first && fd) {
      long double expected = 0.0L;
      if (options_.schedule == BetaSchedule::kFtrlCfr &&
          options_.method == OcoMethod::kFtrl) {
        expected = cf_cumulative_values_[j.id] +
                   options_.epsilon /
                       std::sqrt(static_cast<long double>(j.num_actions));
      } else if (options_.schedule == BetaSchedule::kOmdCfr &&
                 options_.method == OcoMethod::kOmd) {
        expected = cf_.values[j.id];
      } else {
        continue;
      }
      f_identity_residual_ =
          std::max(f_identity_residual_,
                   static_cast<double>(std::abs(f_[j.id] - expected)));
    }
  }
}

}  // namespace cfroco
