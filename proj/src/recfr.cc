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

#include "cfroco/recfr.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "cfroco/local_minimizers.h"

namespace cfroco {

namespace {

double SquaredNorm(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return s;
}

double PositiveSquaredNorm(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e > 0.0 ? e * e : 0.0;
  return s;
}

// x = [alpha - v]^+ normalized. Returns false on an all-zero clip.
bool ClipAndNormalize(std::span<const double> v, double alpha,
                      std::span<double> x) {
  double sum = 0.0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    x[a] = std::max(alpha - v[a], 0.0);
    sum += x[a];
  }
  if (!(sum > 0.0)) {
    const double u = 1.0 / static_cast<double>(x.size());
    for (double& e : x) e = u;
    return false;
  }
  for (double& e : x) e /= sum;
  return true;
}

// Applies one instantaneous-regret step at the current strategy to `shadow`.
void ShadowStep(const Treeplex& tp, const SequenceVector& loss,
                const BehavioralStrategy& strategy, bool plus,
                CounterfactualLosses& cf, SequenceVector& shadow) {
  ComputeCounterfactualLossesInto(tp, loss, strategy, cf);
  for (const auto& j : tp.decision_points()) {
    for (int a = 0; a < j.num_actions; ++a) {
      const int s = j.slot(a);
      const double r = cf.values[j.id] - cf.action_losses[s];
      shadow[s] = plus ? std::max(shadow[s] + r, 0.0) : shadow[s] + r;
    }
  }
}

}  // namespace


WeightSchedule::WeightSchedule(Weighting weighting, double lambda,
                               int horizon, const LossContext& context)
    : weighting_(weighting), lambda_(lambda), horizon_(horizon) {
  if (weighting != Weighting::kOracle && !(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive");
  }
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  const double l2 = context.loss_bound * context.loss_bound;
  base_.resize(context.num_actions.size());
  reach_ = context.opponent_reach;
  for (std::size_t j = 0; j < base_.size(); ++j) {
    base_[j] = context.opponent_reach[j] * context.num_actions[j] * l2;
  }
}

double WeightSchedule::operator()(int j, int t) const {
  switch (weighting_) {
    case Weighting::kLinear:
      return lambda_ * base_[j] * t;
    case Weighting::kConstant:
      return lambda_ * base_[j] * horizon_;
    case Weighting::kExperimental:
      return lambda_ * base_[j] * reach_[j] * t;
    case Weighting::kOracle:
      break;
  }
  throw std::logic_error("oracle weights come from the shadow state");
}

RecfrSolver::RecfrSolver(const Treeplex& tp, const LossContext& context,
                         RecfrOptions options)
    : tp_(tp),
      options_(options),
      schedule_(options.weighting, options.lambda, options.horizon, context),
      strategy_(BehavioralStrategy::Uniform(tp)),
      alpha_(tp.num_decision_points(), 0.0),
      lambda_(tp.num_decision_points(), 0.0),
      v_(tp.max_actions()) {
  t_ = options.start_iteration;
  if (options_.weighting == Weighting::kOracle) {
    if (!(options_.epsilon > 0.0)) {
      throw std::invalid_argument("epsilon initialization must be positive");
    }
    if (options_.predicted || options_.averaging != Averaging::kUniform) {
      throw std::invalid_argument(
          "oracle weights need uniform loss weights and no prediction");
    }
    shadow_ = EpsilonInitialRegrets(tp, options_.epsilon);
    offset_ = SequenceVector(tp.num_sequences());
    for (const auto& j : tp.decision_points()) {
      for (int a = 0; a < j.num_actions; ++a) {
        for (int c : j.children[a]) {
          offset_[j.slot(a)] -=
              options_.epsilon /
              std::sqrt(static_cast<double>(tp.point(c).num_actions));
        }
      }
    }
  }
}

void RecfrSolver::Update(const SequenceVector& loss,
                         const SequenceVector* cumulative_loss) {
  if (cumulative_loss == nullptr) {
    throw std::invalid_argument("ReCFR needs the cumulative loss");
  }
  if (static_cast<int>(loss.size()) != tp_.num_sequences() ||
      static_cast<int>(cumulative_loss->size()) != tp_.num_sequences()) {
    throw std::invalid_argument("loss does not fit the treeplex");
  }
  const bool oracle = options_.weighting == Weighting::kOracle;
  if (oracle) {
    ShadowStep(tp_, loss, strategy_, /*plus=*/false, cf_, shadow_);
  }
  ++t_;
  const double next_weight =
      AverageAccumulator::Weight(options_.averaging, t_ + 1);
  for (const auto& j : tp_.decision_points()) {
    std::span<double> v(v_.data(), j.num_actions);
    for (int a = 0; a < j.num_actions; ++a) {
      const int s = j.slot(a);
      double g = 0.0;
      for (int c : j.children[a]) g += alpha_[c];
      v[a] = (*cumulative_loss)[s] + g;
      if (oracle) v[a] += offset_[s];
      if (options_.predicted) v[a] += next_weight * loss[s];
    }
    lambda_[j.id] =
        oracle ? PositiveSquaredNorm(shadow_.slice(j)) : schedule_(j.id, t_);
    if (!(lambda_[j.id] > 0.0)) {
      throw std::runtime_error("weight vanished at a decision point");
    }
    const double alpha = SolveAlphaL2(v, lambda_[j.id]);
    alpha_[j.id] = alpha;
    diag_.max_residual =
        std::max(diag_.max_residual,
                 RelativeResidual(HingeL2Squared(v, alpha), lambda_[j.id]));
    if (!ClipAndNormalize(v, alpha, strategy_.at(j))) {
      ++diag_.uniform_fallbacks;
    }
  }
}

PicfrSolver::PicfrSolver(const Treeplex& tp, const LossContext& context,
                         PicfrOptions options)
    : tp_(tp),
      options_(options),
      schedule_(options.weighting, options.lambda, options.horizon, context),
      strategy_(BehavioralStrategy::Uniform(tp)),
      previous_loss_(tp.num_sequences()),
      effective_loss_(tp.num_sequences()),
      f_(tp.num_decision_points(), 0.0),
      lambda_prev_(tp.num_decision_points(), 0.0),
      lambda_(tp.num_decision_points(), 0.0),
      v_(tp.max_actions()) {
  if (options_.weighting == Weighting::kOracle) {
    if (!(options_.epsilon > 0.0)) {
      throw std::invalid_argument("epsilon initialization must be positive");
    }
    if (options_.predicted) {
      throw std::invalid_argument("oracle weights take no prediction");
    }
    shadow_ = EpsilonInitialRegrets(tp, options_.epsilon);
    for (const auto& j : tp.decision_points()) {
      lambda_prev_[j.id] = SquaredNorm(shadow_.slice(j));
    }
  } else {
    // No lambda^0 is prescribed; lambda^1 stands in.
    for (const auto& j : tp.decision_points()) {
      lambda_prev_[j.id] = schedule_(j.id, 1);
    }
  }
  lambda_ = lambda_prev_;
}

void PicfrSolver::Update(const SequenceVector& loss,
                         const SequenceVector* /*cumulative_loss*/) {
  if (static_cast<int>(loss.size()) != tp_.num_sequences()) {
    throw std::invalid_argument("loss does not fit the treeplex");
  }
  const bool oracle = options_.weighting == Weighting::kOracle;
  if (oracle) {
    ShadowStep(tp_, loss, strategy_, /*plus=*/true, cf_, shadow_);
  }
  for (int s = 0; s < tp_.num_sequences(); ++s) {
    effective_loss_[s] = loss[s];
    if (options_.predicted && t_ > 0) {
      effective_loss_[s] += loss[s] - previous_loss_[s];
    }
  }
  previous_loss_ = loss;
  ++t_;
  for (const auto& j : tp_.decision_points()) {
    std::span<double> v(v_.data(), j.num_actions);
    std::span<double> x = strategy_.at(j);
    const double beta_prev = std::sqrt(lambda_prev_[j.id] / SquaredNorm(x));
    for (int a = 0; a < j.num_actions; ++a) {
      const int s = j.slot(a);
      double g = 0.0;
      for (int c : j.children[a]) g += f_[c];
      v[a] = effective_loss_[s] + g - beta_prev * x[a];
    }
    lambda_[j.id] =
        oracle ? SquaredNorm(shadow_.slice(j)) : schedule_(j.id, t_);
    if (!(lambda_[j.id] > 0.0)) {
      throw std::runtime_error("weight vanished at a decision point");
    }
    const double alpha = SolveAlphaL2(v, lambda_[j.id]);
    f_[j.id] = alpha;
    diag_.max_residual =
        std::max(diag_.max_residual,
                 RelativeResidual(HingeL2Squared(v, alpha), lambda_[j.id]));
    if (!ClipAndNormalize(v, alpha, x)) ++diag_.uniform_fallbacks;
  }
  lambda_prev_ = lambda_;
}

}  // namespace cfroco
