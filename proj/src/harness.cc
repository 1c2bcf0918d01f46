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

#include "cfroco/harness.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cfroco/evaluation.h"
#include "cfroco/games.h"
#include "cfroco/oco.h"

namespace cfroco {

namespace {

struct AlgorithmEntry {
  Algorithm algorithm;
  std::string_view name;
};

constexpr std::array<AlgorithmEntry, 14> kAlgorithms = {{
    {Algorithm::kCfr, "cfr"},
    {Algorithm::kCfrRmPlus, "cfr_rm_plus"},
    {Algorithm::kCfrPlus, "cfr_plus"},
    {Algorithm::kLcfr, "lcfr"},
    {Algorithm::kPcfr, "pcfr"},
    {Algorithm::kPcfrPlus, "pcfr_plus"},
    {Algorithm::kFtrl, "ftrl"},
    {Algorithm::kOmd, "omd"},
    {Algorithm::kFtrlCfr, "ftrl_cfr"},
    {Algorithm::kOmdCfr, "omd_cfr"},
    {Algorithm::kRecfr, "recfr"},
    {Algorithm::kPicfr, "picfr"},
    {Algorithm::kPrecfr, "precfr"},
    {Algorithm::kPpicfr, "ppicfr"},
}};

bool IsRecfr(Algorithm a) {
  return a == Algorithm::kRecfr || a == Algorithm::kPrecfr;
}

bool IsPicfr(Algorithm a) {
  return a == Algorithm::kPicfr || a == Algorithm::kPpicfr;
}

bool UsesLambda(Algorithm a) {
  return IsRecfr(a) || IsPicfr(a) || a == Algorithm::kFtrl ||
         a == Algorithm::kOmd;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void WriteRow(std::ostream& out, const IterationRecord& r,
              const double* divergence) {
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", r.wall_ms);
  out << r.iteration << ',' << FormatDouble(r.exploitability) << ',' << wall
      << ',' << r.assumption1_violations << ','
      << FormatDouble(r.max_residual);
  if (divergence != nullptr) out << ',' << FormatDouble(*divergence);
  out << '\n';
  out.flush();
}

// Two solvers, their weighted cumulative losses and the strategy averages.
class Side {
 public:
  Side(const SequenceFormGame& game, const RunConfig& config)
      : game_(game),
        averaging_(config.ResolvedAveraging()),
        solvers_{MakeSolver(game, 0, config), MakeSolver(game, 1, config)},
        cumulative_{SequenceVector(game.treeplex(0).num_sequences()),
                    SequenceVector(game.treeplex(1).num_sequences())},
        averages_{AverageAccumulator(game.treeplex(0).num_sequences(),
                                     averaging_),
                  AverageAccumulator(game.treeplex(1).num_sequences(),
                                     averaging_)} {
    for (int p = 0; p < 2; ++p) current_[p] = SequenceOf(p);
  }

  const Solver& solver(int p) const { return *solvers_[p]; }
  const SequenceVector& current(int p) const { return current_[p]; }

  void Feed(int p, const SequenceVector& loss, int t) {
    const SequenceVector* cumulative = nullptr;
    if (solvers_[p]->needs_cumulative_loss()) {
      const double w = AverageAccumulator::Weight(averaging_, t);
      for (std::size_t i = 0; i < loss.size(); ++i) {
        cumulative_[p][i] += w * loss[i];
      }
      cumulative = &cumulative_[p];
    }
    solvers_[p]->Update(loss, cumulative);
    for (double v : solvers_[p]->strategy().values()) {
      if (!std::isfinite(v)) {
        throw std::runtime_error(
            "non-finite strategy for player " + std::to_string(p + 1) +
            " at iteration " + std::to_string(t));
      }
    }
    current_[p] = SequenceOf(p);
  }

  void Accumulate(int p, const SequenceVector& x, int t) {
    averages_[p].Add(x, t);
  }

  SequenceVector Average(int p) const { return averages_[p].Extract(); }

  void Fill(IterationRecord& r) const {
    r.assumption1_violations = 0;
    r.max_residual = 0.0;
    for (int p = 0; p < 2; ++p) {
      const SolverDiagnostics& d = solvers_[p]->diagnostics();
      r.assumption1_violations += d.assumption1_violations;
      r.max_residual = std::max(r.max_residual, d.max_residual);
    }
  }

 private:
  SequenceVector SequenceOf(int p) const {
    return BehavioralToSequence(game_.treeplex(p), solvers_[p]->strategy());
  }

  const SequenceFormGame& game_;
  Averaging averaging_;
  std::unique_ptr<Solver> solvers_[2];
  SequenceVector cumulative_[2];
  AverageAccumulator averages_[2];
  SequenceVector current_[2];
};

// One iteration of `driver` (and `follower`, fed the same losses).
void Step(const SequenceFormGame& game, UpdateOrder order, int t,
          Side& driver, Side* follower) {
  if (order == UpdateOrder::kAlternating) {
    const SequenceVector l1 = game.LossVector(0, driver.current(1));
    driver.Feed(0, l1, t);
    if (follower != nullptr) follower->Feed(0, l1, t);
    const SequenceVector l2 = game.LossVector(1, driver.current(0));
    driver.Feed(1, l2, t);
    if (follower != nullptr) follower->Feed(1, l2, t);
    for (Side* s : {&driver, follower}) {
      if (s == nullptr) continue;
      s->Accumulate(0, s->current(0), t);
      s->Accumulate(1, s->current(1), t);
    }
  } else {
    const SequenceVector l1 = game.LossVector(0, driver.current(1));
    const SequenceVector l2 = game.LossVector(1, driver.current(0));
    for (Side* s : {&driver, follower}) {
      if (s == nullptr) continue;
      s->Accumulate(0, s->current(0), t);
      s->Accumulate(1, s->current(1), t);
      s->Feed(0, l1, t);
      s->Feed(1, l2, t);
    }
  }
}

double Divergence(const Side& a, const Side& b) {
  double d = 0.0;
  for (int p = 0; p < 2; ++p) {
    const auto& xa = a.solver(p).strategy().values();
    const auto& xb = b.solver(p).strategy().values();
    for (std::size_t i = 0; i < xa.size(); ++i) {
      d = std::max(d, std::abs(xa[i] - xb[i]));
    }
  }
  return d;
}

class Clock {
 public:
  explicit Clock(Timing timing)
      : timing_(timing), start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    if (timing_ == Timing::kOff) return 0.0;
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  Timing timing_;
  std::chrono::steady_clock::time_point start_;
};

bool EvaluateNow(int t, int total, int every) {
  return t % every == 0 || t == total;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& e : kAlgorithms) {
    if (e.algorithm == algorithm) return e.name;
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& e : kAlgorithms) {
    if (e.name == name) return e.algorithm;
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

Averaging ParseAveraging(std::string_view name) {
  if (name == "uniform") return Averaging::kUniform;
  if (name == "linear") return Averaging::kLinear;
  throw std::invalid_argument("unknown averaging: " + std::string(name));
}

Weighting ParseWeighting(std::string_view name) {
  if (name == "constant") return Weighting::kConstant;
  if (name == "linear") return Weighting::kLinear;
  if (name == "oracle") return Weighting::kOracle;
  if (name == "experimental") return Weighting::kExperimental;
  throw std::invalid_argument("unknown weighting: " + std::string(name));
}

UpdateOrder ParseUpdateOrder(std::string_view name) {
  if (name == "alt" || name == "alternating") return UpdateOrder::kAlternating;
  if (name == "sim" || name == "simultaneous") {
    return UpdateOrder::kSimultaneous;
  }
  throw std::invalid_argument("unknown update order: " + std::string(name));
}

Timing ParseTiming(std::string_view name) {
  if (name == "wall") return Timing::kWall;
  if (name == "off") return Timing::kOff;
  throw std::invalid_argument("unknown timing mode: " + std::string(name));
}

Averaging DefaultAveraging(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCfr:
    case Algorithm::kCfrRmPlus:
    case Algorithm::kPcfr:
    case Algorithm::kFtrl:
    case Algorithm::kOmd:
    case Algorithm::kFtrlCfr:
    case Algorithm::kOmdCfr:
      return Averaging::kUniform;
    default:
      return Averaging::kLinear;
  }
}

void RunConfig::Validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (eval_every && *eval_every < 1) {
    throw std::invalid_argument("eval_every must be >= 1");
  }
  if (epsilon_init && !(*epsilon_init > 0.0)) {
    throw std::invalid_argument("epsilon_init must be positive");
  }
  if (UsesLambda(algorithm) && weighting != Weighting::kOracle &&
      !(lambda > 0.0)) {
    throw std::invalid_argument("lambda must be positive");
  }
  if (weighting == Weighting::kOracle) {
    if (algorithm != Algorithm::kRecfr && algorithm != Algorithm::kPicfr) {
      throw std::invalid_argument(
          "oracle weighting applies to recfr and picfr only");
    }
    if (algorithm == Algorithm::kRecfr && averaging &&
        *averaging != Averaging::kUniform) {
      throw std::invalid_argument("oracle recfr needs uniform loss weights");
    }
  }
}

Averaging RunConfig::ResolvedAveraging() const {
  if (averaging) return *averaging;
  if (weighting == Weighting::kOracle && IsRecfr(algorithm)) {
    return Averaging::kUniform;
  }
  return DefaultAveraging(algorithm);
}

int RunConfig::ResolvedEvalEvery() const {
  if (eval_every) return *eval_every;
  return std::max(1, (iterations + 199) / 200);
}

double RunConfig::ResolvedEpsilon(double loss_bound) const {
  if (epsilon_init) return *epsilon_init;
  return kDefaultEpsilonScale * std::max(loss_bound, 1e-300);
}

std::unique_ptr<Solver> MakeSolver(const SequenceFormGame& game, int player,
                                   const RunConfig& config) {
  config.Validate();
  const Treeplex& tp = game.treeplex(player);
  const LossContext& context = game.loss_context(player);
  const double eps = config.ResolvedEpsilon(game.loss_bound());
  const Algorithm a = config.algorithm;
  switch (a) {
    case Algorithm::kCfr:
    case Algorithm::kCfrRmPlus:
    case Algorithm::kCfrPlus:
    case Algorithm::kLcfr:
    case Algorithm::kPcfr:
    case Algorithm::kPcfrPlus: {
      CfrOptions o;
      o.epsilon = eps;
      o.variant = a == Algorithm::kCfr         ? CfrVariant::kRm
                  : a == Algorithm::kLcfr      ? CfrVariant::kLinear
                  : a == Algorithm::kPcfr      ? CfrVariant::kPredicted
                  : a == Algorithm::kPcfrPlus  ? CfrVariant::kPredictedPlus
                                               : CfrVariant::kRmPlus;
      return std::make_unique<CfrSolver>(tp, o);
    }
    case Algorithm::kFtrl:
    case Algorithm::kOmd:
    case Algorithm::kFtrlCfr:
    case Algorithm::kOmdCfr: {
      OcoOptions o;
      o.epsilon = eps;
      o.method = (a == Algorithm::kFtrl || a == Algorithm::kFtrlCfr)
                     ? OcoMethod::kFtrl
                     : OcoMethod::kOmd;
      if (a == Algorithm::kFtrl || a == Algorithm::kOmd) {
        o.kind = RegularizerKind::kEuclidean;
        o.schedule = BetaSchedule::kNonadaptive;
        o.scale = config.lambda;
        o.loss_bound = game.loss_bound();
        o.horizon = config.iterations;
      } else {
        o.kind = RegularizerKind::kFutureDepended;
        o.schedule = a == Algorithm::kFtrlCfr ? BetaSchedule::kFtrlCfr
                                              : BetaSchedule::kOmdCfr;
      }
      return std::make_unique<OcoSolver>(tp, o);
    }
    case Algorithm::kRecfr:
    case Algorithm::kPrecfr: {
      RecfrOptions o;
      o.weighting = config.weighting;
      o.lambda = config.lambda;
      o.horizon = config.iterations;
      o.averaging = config.ResolvedAveraging();
      o.predicted = a == Algorithm::kPrecfr;
      o.epsilon = eps;
      return std::make_unique<RecfrSolver>(tp, context, o);
    }
    case Algorithm::kPicfr:
    case Algorithm::kPpicfr: {
      PicfrOptions o;
      o.weighting = config.weighting;
      o.lambda = config.lambda;
      o.horizon = config.iterations;
      o.predicted = a == Algorithm::kPpicfr;
      o.epsilon = eps;
      return std::make_unique<PicfrSolver>(tp, context, o);
    }
  }
  throw std::invalid_argument("unhandled algorithm");
}

RunResult Run(const SequenceFormGame& game, const RunConfig& config,
              std::ostream* csv) {
  config.Validate();
  Side side(game, config);
  const int every = config.ResolvedEvalEvery();
  if (csv != nullptr) *csv << kCsvHeader << '\n';
  RunResult result;
  Clock clock(config.timing);
  for (int t = 1; t <= config.iterations; ++t) {
    Step(game, config.order, t, side, nullptr);
    if (!EvaluateNow(t, config.iterations, every)) continue;
    IterationRecord r;
    r.iteration = t;
    r.exploitability =
        Exploitability(game, side.Average(0), side.Average(1));
    r.wall_ms = clock.ElapsedMs();
    side.Fill(r);
    if (csv != nullptr) WriteRow(*csv, r, nullptr);
    result.records.push_back(r);
  }
  for (int p = 0; p < 2; ++p) {
    result.average[p] = side.Average(p);
    result.diagnostics[p] = side.solver(p).diagnostics();
  }
  return result;
}

RunResult Run(const RunConfig& config, std::ostream* csv) {
  config.Validate();
  const SequenceFormGame game(BuildGame(config.game));
  return Run(game, config, csv);
}

LockstepResult LockstepCompare(const SequenceFormGame& game,
                               const RunConfig& a, const RunConfig& b,
                               std::ostream* csv) {
  if (a.game != b.game) {
    throw std::invalid_argument("lockstep runs need the same game");
  }
  a.Validate();
  b.Validate();
  Side side_a(game, a);
  Side side_b(game, b);
  const int every = a.ResolvedEvalEvery();
  if (csv != nullptr) *csv << kCsvHeader << ",max_divergence\n";
  LockstepResult result;
  result.max_divergence = Divergence(side_a, side_b);
  Clock clock(a.timing);
  for (int t = 1; t <= a.iterations; ++t) {
    Step(game, a.order, t, side_a, &side_b);
    const double d = Divergence(side_a, side_b);
    result.divergence.push_back(d);
    result.max_divergence = std::max(result.max_divergence, d);
    if (!EvaluateNow(t, a.iterations, every)) continue;
    IterationRecord r;
    r.iteration = t;
    r.exploitability =
        Exploitability(game, side_a.Average(0), side_a.Average(1));
    r.wall_ms = clock.ElapsedMs();
    side_b.Fill(r);
    if (csv != nullptr) WriteRow(*csv, r, &result.max_divergence);
    result.records.push_back(r);
  }
  return result;
}

SweepResult Sweep(const SequenceFormGame& game, const RunConfig& config,
                  const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty lambda grid");
  if (!UsesLambda(config.algorithm)) {
    throw std::invalid_argument(std::string(AlgorithmName(config.algorithm)) +
                                " has no lambda to sweep");
  }
  SweepResult result;
  for (double lambda : grid) {
    RunConfig c = config;
    c.lambda = lambda;
    RunResult run = Run(game, c, nullptr);
    const double final_eps = run.records.back().exploitability;
    result.lambdas.push_back(lambda);
    result.final_exploitability.push_back(final_eps);
    result.traces.push_back(std::move(run.records));
    if (result.best < 0 ||
        final_eps < result.final_exploitability[result.best]) {
      result.best = static_cast<int>(result.lambdas.size()) - 1;
    }
  }
  return result;
}

}  // namespace cfroco
