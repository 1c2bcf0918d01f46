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

#ifndef CFROCO_SOLVER_H_
#define CFROCO_SOLVER_H_

#include <cstdint>

#include "cfroco/treeplex.h"

namespace cfroco {

struct SolverDiagnostics {
  // Steps where ||beta^{t-1} x^t||^2 > ||beta^t x^{t+1}||^2 at some point.
  std::int64_t assumption1_violations = 0;
  // Largest |hinge(alpha) - target| / max(1, target) over alpha solves.
  double max_residual = 0.0;
  // Violations of the regret-norm chains of RM (both sides) and RM+.
  std::int64_t norm_chain_violations = 0;
  // Local decisions that fell back to uniform on a zero positive part.
  std::int64_t uniform_fallbacks = 0;
};

// One player's regret minimizer over a treeplex. A solver starts at x^1,
// receives the loss of its current strategy each iteration and moves to the
// next strategy.
class Solver {
 public:
  virtual ~Solver() = default;

  virtual const BehavioralStrategy& strategy() const = 0;

  // `loss` is l^t, the loss vector against the opponent's current strategy.
  // `cumulative_loss` is the weighted sum of all losses so far, including
  // l^t, and is only read by solvers reporting needs_cumulative_loss().
  virtual void Update(const SequenceVector& loss,
                      const SequenceVector* cumulative_loss) = 0;

  virtual bool needs_cumulative_loss() const { return false; }

  // Number of completed updates.
  int iteration() const { return t_; }
  const SolverDiagnostics& diagnostics() const { return diag_; }

 protected:
  int t_ = 0;
  SolverDiagnostics diag_;
};

// Relative alpha residual recorded in SolverDiagnostics::max_residual.
double RelativeResidual(double achieved, double target);

}  // namespace cfroco

#endif  // CFROCO_SOLVER_H_
