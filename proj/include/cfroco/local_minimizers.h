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

// Local update rules applied at a single decision point. All functions work
// on caller-owned buffers of length n_j and are reentrant.

#ifndef CFROCO_LOCAL_MINIMIZERS_H_
#define CFROCO_LOCAL_MINIMIZERS_H_

#include <span>

namespace cfroco {

// x = [v]^+ / ||[v]^+||_1. Writes the uniform point and returns false when
// the positive part is zero.
bool PositivePartNormalize(std::span<const double> v, std::span<double> x);

// Regret matching: cumulative += inst, then strategy from the positive part.
// Returns false when the uniform fallback was used.
bool RmUpdate(std::span<double> cumulative, std::span<const double> inst,
              std::span<double> strategy);

// Regret matching+: q = [q + inst]^+, strategy = q / ||q||_1 (uniform if 0).
bool RmPlusUpdate(std::span<double> q, std::span<const double> inst,
                  std::span<double> strategy);

// Unique alpha with ||[alpha - v]^+||_1 = target, target > 0.
//
// Sorts v ascending (ties broken by index) and scans the piecewise-linear
// segments; O(n log n). Throws std::invalid_argument if target <= 0.
double SolveAlphaL1(std::span<const double> v, double target);
// Extended-precision overload for the recursive FTRL/OMD passes.
long double SolveAlphaL1(std::span<const long double> v, long double target);

// Unique alpha with ||[alpha - v]^+||_2^2 = target, target > 0. Piecewise
// quadratic scan over sorted breakpoints; O(n log n).
double SolveAlphaL2(std::span<const double> v, double target);

// ||[alpha - v]^+||_1 and ||[alpha - v]^+||_2^2, used to check residuals.
double HingeL1(std::span<const double> v, double alpha);
long double HingeL1(std::span<const long double> v, long double alpha);
double HingeL2Squared(std::span<const double> v, double alpha);

}  // namespace cfroco

#endif  // CFROCO_LOCAL_MINIMIZERS_H_
