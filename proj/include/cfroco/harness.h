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

// Experiment driver: update loops, averaging, periodic evaluation, CSV
// traces, lockstep comparison of two algorithms and lambda sweeps.

#ifndef CFROCO_HARNESS_H_
#define CFROCO_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfroco/cfr.h"
#include "cfroco/recfr.h"
#include "cfroco/sequence_form.h"
#include "cfroco/solver.h"

namespace cfroco {

enum class Algorithm {
  kCfr,
  kCfrRmPlus,
  kCfrPlus,
  kLcfr,
  kPcfr,
  kPcfrPlus,
  kFtrl,
  kOmd,
  kFtrlCfr,
  kOmdCfr,
  kRecfr,
  kPicfr,
  kPrecfr,
  kPpicfr,
};

enum class UpdateOrder { kAlternating, kSimultaneous };

// kOff writes 0 in the wall_ms column so traces compare byte for byte.
enum class Timing { kWall, kOff };

std::string_view AlgorithmName(Algorithm algorithm);
// Throws std::invalid_argument on unknown names.
Algorithm ParseAlgorithm(std::string_view name);
Averaging ParseAveraging(std::string_view name);
Weighting ParseWeighting(std::string_view name);
UpdateOrder ParseUpdateOrder(std::string_view name);
Timing ParseTiming(std::string_view name);

// cfr, cfr_rm_plus, pcfr and the FTRL/OMD family average uniformly; the
// rest linearly.
Averaging DefaultAveraging(Algorithm algorithm);

inline constexpr double kDefaultEpsilonScale = 1e-6;

struct RunConfig {
  std::string game = "kuhn";
  Algorithm algorithm = Algorithm::kCfr;
  int iterations = 1000;
  // Unset: DefaultAveraging(algorithm).
  std::optional<Averaging> averaging;
  Weighting weighting = Weighting::kConstant;
  // ReCFR/PICFR weight, or the scale of the non-adaptive FTRL/OMD weights.
  double lambda = 1e-3;
  // Unset: kDefaultEpsilonScale * L.
  std::optional<double> epsilon_init;
  // Unset: ceil(iterations / 200).
  std::optional<int> eval_every;
  UpdateOrder order = UpdateOrder::kAlternating;
  // Recorded only; every solver is deterministic.
  std::uint64_t seed = 0;
  std::string output;
  Timing timing = Timing::kWall;

  // Throws std::invalid_argument on an invalid combination.
  void Validate() const;
  Averaging ResolvedAveraging() const;
  int ResolvedEvalEvery() const;
  double ResolvedEpsilon(double loss_bound) const;
};

std::unique_ptr<Solver> MakeSolver(const SequenceFormGame& game, int player,
                                   const RunConfig& config);

struct IterationRecord {
  int iteration = 0;
  double exploitability = 0.0;
  double wall_ms = 0.0;
  // Summed over both players.
  long assumption1_violations = 0;
  // Largest over both players.
  double max_residual = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "iteration,exploitability,wall_ms,assumption1_violations,max_residual";

struct RunResult {
  std::vector<IterationRecord> records;
  SequenceVector average[2];
  SolverDiagnostics diagnostics[2];
};

// Runs config on a compiled game, streaming CSV rows (header first) to `csv`
// when it is non-null. Throws std::runtime_error if a strategy turns NaN.
RunResult Run(const SequenceFormGame& game, const RunConfig& config,
              std::ostream* csv = nullptr);
// Builds the game from config.game first.
RunResult Run(const RunConfig& config, std::ostream* csv = nullptr);

struct LockstepResult {
  // max over j, a and both players of |x̂_A - x̂_B| after each iteration.
  std::vector<double> divergence;
  double max_divergence = 0.0;
  std::vector<IterationRecord> records;
};

// Runs a and b on the same game. a drives the loop; b receives exactly the
// losses a's iterates induce. CSV rows carry an extra max_divergence column.
// Throws std::invalid_argument if the games differ.
LockstepResult LockstepCompare(const SequenceFormGame& game,
                               const RunConfig& a, const RunConfig& b,
                               std::ostream* csv = nullptr);

struct SweepResult {
  std::vector<double> lambdas;
  std::vector<double> final_exploitability;
  std::vector<std::vector<IterationRecord>> traces;
  int best = -1;
  double best_lambda() const { return lambdas[best]; }
};

inline const std::vector<double>& DefaultLambdaGrid() {
  static const std::vector<double> grid = {0.1, 0.01, 1e-3, 1e-4, 1e-5};
  return grid;
}

// Fresh solvers for every lambda. Throws std::invalid_argument on an empty
// grid or an algorithm without a lambda.
SweepResult Sweep(const SequenceFormGame& game, const RunConfig& config,
                  const std::vector<double>& grid);

}  // namespace cfroco

#endif  // CFROCO_HARNESS_H_
