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

#include "cfroco/cfr.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "cfroco/local_minimizers.h"

namespace cfroco {

namespace {

// Tolerance of the regret-norm chain checks, relative to max(1, norm).
constexpr double kChainTolerance = 1e-9;

double PositiveNorm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e > 0.0 ? e * e : 0.0;
  return std::sqrt(s);
}

double Norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

bool Exceeds(double lhs, double rhs) {
  return lhs - rhs > kChainTolerance * std::max(1.0, std::abs(rhs));
}

}  // namespace

double RelativeResidual(double achieved, double target) {
  return std::abs(achieved - target) / std::max(1.0, std::abs(target));
}

SequenceVector EpsilonInitialRegrets(const Treeplex& tp, double epsilon) {
  SequenceVector r(tp.num_sequences());
  for (const auto& j : tp.decision_points()) {
    const double v = epsilon / std::sqrt(static_cast<double>(j.num_actions));
    for (double& e : r.slice(j)) e = v;
  }
  return r;
}

CfrSolver::CfrSolver(const Treeplex& tp, CfrOptions options)
    : tp_(tp),
      options_(options),
      regrets_(EpsilonInitialRegrets(tp, options.epsilon)),
      inst_(tp.num_sequences()),
      strategy_(BehavioralStrategy::Uniform(tp)),
      scratch_(tp.max_actions()) {
  if (!(options.epsilon > 0.0)) {
    throw std::invalid_argument("epsilon initialization must be positive");
  }
}

void CfrSolver::Update(const SequenceVector& loss,
                       const SequenceVector* /*cumulative_loss*/) {
  ComputeCounterfactualLossesInto(tp_, loss, strategy_, cf_);
  ++t_;
  const double discount = static_cast<double>(t_) / (t_ + 1);
  for (const auto& j : tp_.decision_points()) {
    std::span<double> r = inst_.slice(j);
    for (int a = 0; a < j.num_actions; ++a) {
      r[a] = cf_.values[j.id] - cf_.action_losses[j.slot(a)];
    }
    std::span<double> state = regrets_.slice(j);
    std::span<double> x = strategy_.at(j);
    std::span<double> pred(scratch_.data(), j.num_actions);
    bool ok = true;
    switch (options_.variant) {
      case CfrVariant::kRm: {
        const double before = PositiveNorm2(state);
        ok = RmUpdate(state, r, x);
        const double after = PositiveNorm2(state);
        const double bound = std::sqrt(before * before + Norm2(r) * Norm2(r));
        if (Exceeds(before, after) || Exceeds(after, bound)) {
          ++diag_.norm_chain_violations;
        }
        break;
      }
      case CfrVariant::kRmPlus: {
        const double before = Norm2(state);
        ok = RmPlusUpdate(state, r, x);
        if (Exceeds(before, Norm2(state))) ++diag_.norm_chain_violations;
        break;
      }
      case CfrVariant::kLinear:
        ok = RmUpdate(state, r, x);
        for (double& e : state) e *= discount;
        break;
      case CfrVariant::kPredicted:
        for (int a = 0; a < j.num_actions; ++a) {
          state[a] += r[a];
          pred[a] = state[a] + r[a];
        }
        ok = PositivePartNormalize(pred, x);
        break;
      case CfrVariant::kPredictedPlus:
        for (int a = 0; a < j.num_actions; ++a) {
          state[a] = std::max(state[a] + r[a], 0.0);
          pred[a] = state[a] + r[a];
        }
        ok = PositivePartNormalize(pred, x);
        break;
    }
    if (!ok) ++diag_.uniform_fallbacks;
  }
}

AverageAccumulator::AverageAccumulator(std::size_t size, Averaging scheme)
    : scheme_(scheme), sum_(size) {}

double AverageAccumulator::Weight(Averaging scheme, int t) {
  return scheme == Averaging::kUniform ? 1.0 : static_cast<double>(t);
}

void AverageAccumulator::Add(const SequenceVector& x, int t) {
  if (x.size() != sum_.size()) {
    throw std::invalid_argument("strategy does not fit the accumulator");
  }
  const double w = Weight(scheme_, t);
  for (std::size_t i = 0; i < x.size(); ++i) sum_[i] += w * x[i];
  total_weight_ += w;
}

SequenceVector AverageAccumulator::Extract() const {
  if (!(total_weight_ > 0.0)) {
    throw std::logic_error("average extracted before any accumulation");
  }
  SequenceVector out = sum_;
  for (double& v : out.values()) v /= total_weight_;
  return out;
}

}  // namespace cfroco
