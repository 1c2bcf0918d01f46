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

// Counterfactual regret minimization: CFR with RM or RM+, linear CFR, and
// predicted CFR / CFR+, plus strategy averaging.

#ifndef CFROCO_CFR_H_
#define CFROCO_CFR_H_

#include <cstddef>
#include <vector>

#include "cfroco/solver.h"
#include "cfroco/treeplex.h"

namespace cfroco {

enum class CfrVariant {
  kRm,
  kRmPlus,
  // RM with regrets scaled by t/(t+1) after every update.
  kLinear,
  // RM / RM+ on the stored state plus the last instantaneous regret.
  kPredicted,
  kPredictedPlus,
};

struct CfrOptions {
  CfrVariant variant = CfrVariant::kRm;
  // Initial regrets are epsilon / sqrt(n_j) at every action.
  double epsilon = 1e-6;
};

// Fills every slot of decision point j with epsilon / sqrt(n_j).
SequenceVector EpsilonInitialRegrets(const Treeplex& tp, double epsilon);

class CfrSolver : public Solver {
 public:
  CfrSolver(const Treeplex& tp, CfrOptions options);

  const BehavioralStrategy& strategy() const override { return strategy_; }
  void Update(const SequenceVector& loss,
              const SequenceVector* cumulative_loss) override;

  const CfrOptions& options() const { return options_; }
  // R̂ for the RM-based variants, Q̂ for the RM+-based ones.
  const SequenceVector& regrets() const { return regrets_; }
  // Counterfactual losses and instantaneous regrets of the last update,
  // evaluated at the strategy that was played.
  const CounterfactualLosses& last_counterfactual() const { return cf_; }
  const SequenceVector& last_instantaneous_regrets() const { return inst_; }

 private:
  const Treeplex& tp_;
  CfrOptions options_;
  SequenceVector regrets_;
  SequenceVector inst_;
  BehavioralStrategy strategy_;
  CounterfactualLosses cf_;
  std::vector<double> scratch_;
};

enum class Averaging { kUniform, kLinear };

// Weighted running sum of sequence-form strategies.
class AverageAccumulator {
 public:
  AverageAccumulator(std::size_t size, Averaging scheme);

  // Weight 1 (uniform) or t (linear).
  static double Weight(Averaging scheme, int t);

  void Add(const SequenceVector& x, int t);
  // Weighted sum divided by the total weight. Throws std::logic_error before
  // the first Add.
  SequenceVector Extract() const;

  Averaging scheme() const { return scheme_; }
  double total_weight() const { return total_weight_; }
  const SequenceVector& weighted_sum() const { return sum_; }

 private:
  Averaging scheme_;
  SequenceVector sum_;
  double total_weight_ = 0.0;
};

}  // namespace cfroco

#endif  // CFROCO_CFR_H_
