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

#include "cfroco/evaluation.h"

#include <limits>
#include <stdexcept>
#include <vector>

namespace cfroco {

BestResponseResult BestResponse(const Treeplex& tp,
                                const SequenceVector& loss) {
  if (static_cast<int>(loss.size()) != tp.num_sequences()) {
    throw std::invalid_argument("loss does not fit the treeplex");
  }
  std::vector<double> value(tp.num_decision_points(), 0.0);
  std::vector<double> local(tp.num_sequences(), 0.0);
  // Children precede parents, so one forward sweep suffices.
  for (const auto& j : tp.decision_points()) {
    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int a = 0; a < j.num_actions; ++a) {
      double v = loss[j.slot(a)];
      for (int c : j.children[a]) v += value[c];
      if (v < best_value) {
        best_value = v;
        best = a;
      }
    }
    value[j.id] = best_value;
    local[j.slot(best)] = 1.0;
  }
  BestResponseResult result;
  for (int r : tp.roots()) result.value += value[r];
  result.strategy = BehavioralStrategy(std::move(local));
  return result;
}

BestResponseResult BruteForceBestResponse(const Treeplex& tp,
                                          const SequenceVector& loss) {
  if (tp.num_decision_points() > 12 || tp.max_actions() > 3) {
    throw std::invalid_argument("treeplex too large to enumerate");
  }
  if (static_cast<int>(loss.size()) != tp.num_sequences()) {
    throw std::invalid_argument("loss does not fit the treeplex");
  }
  const int n = tp.num_decision_points();
  std::vector<int> choice(n, 0);
  BestResponseResult result;
  result.value = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<double> local(tp.num_sequences(), 0.0);
    for (const auto& j : tp.decision_points()) {
      local[j.slot(choice[j.id])] = 1.0;
    }
    BehavioralStrategy b(std::move(local));
    const double v = Dot(loss, BehavioralToSequence(tp, b));
    if (v < result.value) {
      result.value = v;
      result.strategy = std::move(b);
    }
    int k = 0;
    while (k < n && ++choice[k] == tp.point(k).num_actions) choice[k++] = 0;
    if (k == n) break;
  }
  return result;
}

EvalReport Evaluate(const SequenceFormGame& game, const SequenceVector& x,
                    const SequenceVector& y) {
  EvalReport report;
  report.value = game.Player1Loss(x, y);
  const double br1 = BestResponse(game.treeplex(0), game.LossVector(0, y)).value;
  const double br2 = BestResponse(game.treeplex(1), game.LossVector(1, x)).value;
  report.gap1 = report.value - br1;
  report.gap2 = -report.value - br2;
  report.exploitability = -br2 - br1;
  return report;
}

double Exploitability(const SequenceFormGame& game, const SequenceVector& x,
                      const SequenceVector& y) {
  return Evaluate(game, x, y).exploitability;
}

}  // namespace cfroco
