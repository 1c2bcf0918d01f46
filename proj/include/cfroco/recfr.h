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

// Recursive CFR (ReCFR) and policy-iterative CFR (PICFR).
//
// ReCFR keeps no regrets. Given the weighted cumulative loss L^t it
// recomputes substitute cumulative counterfactual losses bottom-up,
//   [L̂'_j]_a = [L^t]_ja + sum over children j' of alpha_j',
//   alpha_j = SolveAlphaL2(L̂'_j, lambda^t_j),
//   x̂_j = [alpha_j - L̂'_j]^+ normalized.
// PICFR keeps only x^t and solves the same kind of problem around it with
// the instantaneous loss.

#ifndef CFROCO_RECFR_H_
#define CFROCO_RECFR_H_

#include <vector>

#include "cfroco/cfr.h"
#include "cfroco/sequence_form.h"
#include "cfroco/solver.h"
#include "cfroco/treeplex.h"

namespace cfroco {

enum class Weighting {
  // lambda * y_{p_j} * n_j * L^2 * t
  kLinear,
  // lambda * y_{p_j} * n_j * L^2 * T
  kConstant,
  // From a shadow RM (ReCFR) or RM+ (PICFR) state: ||[R̂^t_j]^+||_2^2 or
  // ||Q̂^t_j||_2^2.
  kOracle,
  // lambda * t * y_{p_j}^2 * n_j * L^2
  kExperimental,
};

class WeightSchedule {
 public:
  // Throws std::invalid_argument on lambda <= 0 or horizon < 1.
  WeightSchedule(Weighting weighting, double lambda, int horizon,
                 const LossContext& context);

  // lambda^t_j for t >= 1. Not available for kOracle.
  double operator()(int j, int t) const;

  Weighting weighting() const { return weighting_; }

 private:
  Weighting weighting_;
  double lambda_;
  int horizon_;
  // y_{p_j} n_j L^2 per decision point.
  std::vector<double> base_;
  std::vector<double> reach_;
};

struct RecfrOptions {
  Weighting weighting = Weighting::kConstant;
  double lambda = 1e-3;
  int horizon = 1;
  // Weights of the cumulative loss; the prediction adds w_{t+1} l^t.
  Averaging averaging = Averaging::kLinear;
  // Predicted ReCFR: L^t is replaced by L^t + w_{t+1} l^t.
  bool predicted = false;
  // Shadow initialization for kOracle.
  double epsilon = 1e-6;
  // Number of updates already performed; lets a fresh solver resume a run.
  int start_iteration = 0;
};

class RecfrSolver : public Solver {
 public:
  RecfrSolver(const Treeplex& tp, const LossContext& context,
              RecfrOptions options);

  const BehavioralStrategy& strategy() const override { return strategy_; }
  bool needs_cumulative_loss() const override { return true; }
  void Update(const SequenceVector& loss,
              const SequenceVector* cumulative_loss) override;

  // Substitute values alpha_j of the last pass.
  const std::vector<double>& substitute_values() const { return alpha_; }
  const std::vector<double>& lambda() const { return lambda_; }

 private:
  const Treeplex& tp_;
  RecfrOptions options_;
  WeightSchedule schedule_;
  BehavioralStrategy strategy_;
  // kOracle only: shadow R̂ and the initial cumulative-loss offset.
  SequenceVector shadow_;
  SequenceVector offset_;
  CounterfactualLosses cf_;
  std::vector<double> alpha_;
  std::vector<double> lambda_;
  std::vector<double> v_;
};

struct PicfrOptions {
  Weighting weighting = Weighting::kConstant;
  double lambda = 1e-3;
  int horizon = 1;
  // Predicted PICFR: the loss l^t is replaced by 2 l^t - l^{t-1} (t > 1).
  bool predicted = false;
  double epsilon = 1e-6;
};

class PicfrSolver : public Solver {
 public:
  PicfrSolver(const Treeplex& tp, const LossContext& context,
              PicfrOptions options);

  const BehavioralStrategy& strategy() const override { return strategy_; }
  void Update(const SequenceVector& loss,
              const SequenceVector* cumulative_loss) override;

  const std::vector<double>& f_values() const { return f_; }
  const std::vector<double>& lambda() const { return lambda_; }

 private:
  const Treeplex& tp_;
  PicfrOptions options_;
  WeightSchedule schedule_;
  BehavioralStrategy strategy_;
  SequenceVector shadow_;
  SequenceVector previous_loss_;
  SequenceVector effective_loss_;
  CounterfactualLosses cf_;
  std::vector<double> f_;
  std::vector<double> lambda_prev_;
  std::vector<double> lambda_;
  std::vector<double> v_;
};

}  // namespace cfroco

#endif  // CFROCO_RECFR_H_
