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

// Best responses and exploitability of sequence-form strategy profiles.

#ifndef CFROCO_EVALUATION_H_
#define CFROCO_EVALUATION_H_

#include "cfroco/sequence_form.h"
#include "cfroco/treeplex.h"

namespace cfroco {

struct BestResponseResult {
  // min over pure strategies x' of <loss, x'>.
  double value = 0.0;
  // A pure minimizer; ties go to the lowest action index.
  BehavioralStrategy strategy;
};

// Bottom-up minimization, O(number of sequences).
BestResponseResult BestResponse(const Treeplex& tp, const SequenceVector& loss);

// Enumerates every pure strategy. Intended as a test oracle; throws
// std::invalid_argument above 12 decision points or 3 actions per point.
BestResponseResult BruteForceBestResponse(const Treeplex& tp,
                                          const SequenceVector& loss);

struct EvalReport {
  // x^T A y.
  double value = 0.0;
  // x^T A y - min_x' x'^T A y.
  double gap1 = 0.0;
  // max_y' x^T A y' - x^T A y.
  double gap2 = 0.0;
  // gap1 + gap2.
  double exploitability = 0.0;
};

EvalReport Evaluate(const SequenceFormGame& game, const SequenceVector& x,
                    const SequenceVector& y);

double Exploitability(const SequenceFormGame& game, const SequenceVector& x,
                      const SequenceVector& y);

}  // namespace cfroco

#endif  // CFROCO_EVALUATION_H_
