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

// Recursive FTRL and OMD over dilated Euclidean regularizers with per
// decision point weights beta_j.
//
// Every update is one bottom-up pass. At decision point j the local problem
// reduces to water filling: with v_j the local linear term,
//   alpha = SolveAlphaL1(v_j, beta^t_j),  x̂_j = [alpha - v_j]^+ / beta^t_j,
// and the value F_j passed to the parent sequence depends on the regularizer
// kind. The future-depended kind adds ||x̂_j||^2 of the point being solved,
// which cancels the quadratic term and leaves F_j = alpha.

#ifndef CFROCO_OCO_H_
#define CFROCO_OCO_H_

#include <vector>

#include "cfroco/solver.h"
#include "cfroco/treeplex.h"

namespace cfroco {

enum class OcoMethod { kFtrl, kOmd };

enum class RegularizerKind { kEuclidean, kFutureDepended };

enum class BetaSchedule {
  // beta_j = scale * L * sqrt(T) * depth_factor_j, fixed.
  kNonadaptive,
  // beta^t_j = ||[R̂^t_j]^+||_1 from a shadow RM state.
  kFtrlCfr,
  // beta^t_j = ||Q̂^t_j||_1 from a shadow RM+ state.
  kOmdCfr,
};

struct OcoOptions {
  OcoMethod method = OcoMethod::kFtrl;
  RegularizerKind kind = RegularizerKind::kFutureDepended;
  BetaSchedule schedule = BetaSchedule::kFtrlCfr;
  // Shadow initialization epsilon / sqrt(n_j) for the CFR schedules.
  double epsilon = 1e-6;
  // Non-adaptive weights.
  double scale = 1.0;
  double loss_bound = 1.0;
  int horizon = 1;
};

// depth_factor_j = 2 + max_a sum of the factors of the children of (j, a).
std::vector<double> DepthFactors(const Treeplex& tp);

std::vector<double> NonadaptiveBetas(const Treeplex& tp, double scale,
                                     double loss_bound, int horizon);

class OcoSolver : public Solver {
 public:
  OcoSolver(const Treeplex& tp, OcoOptions options);

  const BehavioralStrategy& strategy() const override { return strategy_; }
  void Update(const SequenceVector& loss,
              const SequenceVector* cumulative_loss) override;

  const OcoOptions& options() const { return options_; }
  // beta^t_j used by the last update (beta^0 before any update).
  const std::vector<double>& beta() const { return beta_; }
  // F^t_j of the last pass.
  std::vector<double> f_values() const;
  // FTRL cumulative loss L^t, including the initial offset of kFtrlCfr.
  SequenceVector cumulative_loss() const;
  // Shadow R̂ or Q̂ of the CFR schedules.
  const SequenceVector& shadow() const { return shadow_; }

  // Largest deviation, over the last pass, of F^t_j from the value the
  // equivalence predicts: the cumulative counterfactual value plus
  // epsilon / sqrt(n_j) (kFtrlCfr) or the instantaneous counterfactual value
  // (kOmdCfr). Zero for other schedules.
  double f_identity_residual() const { return f_identity_residual_; }
  // kFtrlCfr only: largest |[L^t]_j + g^t_j - L̂^t_j| of the last pass, with
  // L̂^t_j the cumulative counterfactual loss vector.
  double bridge_residual() const { return bridge_residual_; }

 private:
  // Bottom-up pass writing the next strategy. `linear` is L^t for FTRL and
  // l^t for OMD. With `first` the pass computes x^1 (no OMD prox term).
  //
  // L^t and g^t grow like t while x̂ depends on alpha - v, which can be as
  // small as the epsilon initialization; the pass runs in long double so
  // the cancellation stays below the lockstep tolerance against CFR.
  void Pass(const std::vector<long double>& linear, bool first);

  const Treeplex& tp_;
  OcoOptions options_;
  BehavioralStrategy strategy_;
  std::vector<long double> cumulative_;
  std::vector<long double> loss_;
  SequenceVector shadow_;
  // Cumulative counterfactual loss vectors and values (kFtrlCfr).
  std::vector<long double> cf_cumulative_;
  std::vector<long double> cf_cumulative_values_;
  std::vector<double> beta_prev_;
  std::vector<double> beta_;
  std::vector<long double> f_;
  std::vector<long double> v_;
  CounterfactualLosses cf_;
  double f_identity_residual_ = 0.0;
  double bridge_residual_ = 0.0;
};

}  // namespace cfroco

#endif  // CFROCO_OCO_H_
