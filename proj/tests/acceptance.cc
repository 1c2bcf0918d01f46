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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfroco/cfr.h"
#include "cfroco/evaluation.h"
#include "cfroco/game_tree.h"
#include "cfroco/games.h"
#include "cfroco/harness.h"
#include "cfroco/local_minimizers.h"
#include "cfroco/recfr.h"
#include "cfroco/sequence_form.h"
#include "cfroco/treeplex.h"
#include "test_util.h"

namespace cfroco {
namespace {

using testing::Game;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "MISMATCH ") + what;
  }
};

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

RunConfig Config(const std::string& game, Algorithm a, int iterations) {
  RunConfig c;
  c.game = game;
  c.algorithm = a;
  c.iterations = iterations;
  return c;
}

Outcome Lockstep(Algorithm reference, Algorithm other, Weighting weighting,
                 const std::vector<std::string>& games, int iterations,
                 double tolerance, double time_limit) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string& name : games) {
    RunConfig a = Config(name, reference, iterations);
    RunConfig b = Config(name, other, iterations);
    b.weighting = weighting;
    const double d = LockstepCompare(Game(name), a, b).max_divergence;
    o.Require(d < tolerance, name + " " + Fmt("%.3g", d));
  }
  const double secs = Seconds(start);
  if (time_limit > 0) o.Require(secs < time_limit, Fmt("%.1f s", secs));
  return o;
}

// Printed table cell: exact integer, or mantissa * 10^exponent rounded to the
// printed digits.
struct Cell {
  double mantissa;
  int exponent;  // 0 for exact entries
};

bool Matches(double value, Cell c) {
  if (c.exponent == 0) return value == c.mantissa;
  const double unit = std::pow(10.0, c.exponent - 1);
  return std::abs(value - c.mantissa * std::pow(10.0, c.exponent)) <=
         0.5 * unit;
}

Outcome GameSizes() {
  struct Row {
    const char* spec;
    const char* label;
    Cell cells[7];
  };
  const Row rows[] = {
      {"leduc", "Leduc",
       {{936, 0}, {3780, 0}, {5520, 0}, {8, 0}, {5, 0}, {49, 0}, {120, 0}}},
      {"leduc(9,2)", "Leduc(2,9)",
       {{9288, 0}, {1.5, 5}, {2.2, 5}, {8, 0}, {17, 0}, {49, 0}, {4896, 0}}},
      {"goofspiel4", "Goofspiel 4",
       {{7304, 0}, {1.1, 4}, {1.4, 4}, {6, 0}, {4, 0}, {576, 0}, {24, 0}}},
      {"goofspiel4_imp", "Goofspiel 4(imp)",
       {{3608, 0}, {1.1, 4}, {1.4, 4}, {6, 0}, {14, 0}, {576, 0}, {24, 0}}},
      {"fhp", "FHP(2,5)",
       {{1.4, 5}, {1.4, 6}, {2.3, 6}, {12, 0}, {9, 0}, {98, 0}, {2.5, 4}}},
      {"goofspiel5", "Goofspiel 5",
       {{9.1, 5}, {1.4, 6}, {1.7, 6}, {8, 0}, {5, 0}, {1.4, 4}, {36, 0}}},
      {"liars_dice", "Liar's dice",
       {{2.5, 4}, {1.5, 5}, {1.5, 5}, {13, 0}, {6, 0}, {4095, 0}, {24, 0}}},
      {"battleship", "Battleship",
       {{4.1, 5}, {2.3, 6}, {7.0, 6}, {10, 0}, {22, 0}, {7.0, 6}, {1, 0}}},
  };
  const char* columns[] = {"decision points", "histories", "leaves", "depth",
                           "decision size", "action factor",
                           "stochastic factor"};
  Outcome o;
  int matched = 0;
  int total = 0;
  for (const Row& row : rows) {
    GameStats s;
    {
      const GameTree tree = BuildGame(row.spec);
      s = ComputeGameStats(tree);
    }
    const double got[7] = {static_cast<double>(s.num_decision_points),
                           static_cast<double>(s.num_histories),
                           static_cast<double>(s.num_leaves),
                           static_cast<double>(s.depth),
                           static_cast<double>(s.max_decision_size),
                           static_cast<double>(s.action_factor),
                           static_cast<double>(s.stochastic_factor)};
    for (int c = 0; c < 7; ++c) {
      ++total;
      if (Matches(got[c], row.cells[c])) {
        ++matched;
        continue;
      }
      const Cell e = row.cells[c];
      o.Require(false, std::string(row.label) + " " + columns[c] + " " +
                           Fmt("%.0f", got[c]) + " vs table " +
                           (e.exponent == 0
                                ? Fmt("%.0f", e.mantissa)
                                : Fmt("%.1f", e.mantissa) + "e" +
                                      std::to_string(e.exponent)));
    }
  }
  o.detail = std::to_string(matched) + "/" + std::to_string(total) +
             " cells" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

double BisectAlpha(const std::vector<double>& v, double target, bool squared) {
  auto h = [&](double alpha) {
    double s = 0.0;
    for (double e : v) {
      const double d = std::max(alpha - e, 0.0);
      s += squared ? d * d : d;
    }
    return s;
  };
  double lo = *std::min_element(v.begin(), v.end());
  double hi = *std::max_element(v.begin(), v.end()) + target +
              std::sqrt(target) + 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome PropertySuites() {
  Outcome o;
  std::mt19937_64 rng(2026);
  double decomposition = 0.0;
  double orthogonality = 0.0;
  for (const std::string& name : testing::DeskGames()) {
    for (int p = 0; p < 2; ++p) {
      const Treeplex& tp = Game(name).treeplex(p);
      for (int draw = 0; draw < 500; ++draw) {
        const SequenceVector l = testing::RandomVector(tp.num_sequences(), rng);
        const BehavioralStrategy b = testing::RandomBehavioral(tp, rng);
        decomposition = std::max(
            decomposition, RegretDecompositionResidual(
                               tp, l, b, testing::RandomBehavioral(tp, rng)));
        const SequenceVector r =
            InstantaneousRegrets(tp, ComputeCounterfactualLosses(tp, l, b));
        for (const auto& j : tp.decision_points()) {
          double dot = 0.0;
          for (int a = 0; a < j.num_actions; ++a) {
            dot += r[j.slot(a)] * b[j.slot(a)];
          }
          orthogonality = std::max(orthogonality, std::abs(dot));
        }
      }
    }
  }
  o.Require(decomposition < 1e-9,
            "decomposition residual " + Fmt("%.2g", decomposition));
  o.Require(orthogonality < 1e-10, "orthogonality " + Fmt("%.2g", orthogonality));

  long chain_violations = 0;
  for (Algorithm a : {Algorithm::kCfr, Algorithm::kCfrRmPlus}) {
    for (const std::string& name : testing::DeskGames()) {
      RunConfig c = Config(name, a, 500);
      c.eval_every = 500;
      const RunResult r = Run(Game(name), c);
      chain_violations += r.diagnostics[0].norm_chain_violations +
                          r.diagnostics[1].norm_chain_violations;
    }
  }
  o.Require(chain_violations == 0,
            "norm chain violations " + std::to_string(chain_violations));

  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> log_target(-6.0, 4.0);
  double worst = 0.0;
  double oracle_gap = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> v(size(rng));
    for (double& e : v) e = value(rng);
    const double target = std::pow(10.0, log_target(rng));
    const double scale = std::max(1.0, target);
    const double a1 = SolveAlphaL1(v, target);
    const double a2 = SolveAlphaL2(v, target);
    worst = std::max(worst, std::abs(HingeL1(v, a1) - target) / scale);
    worst = std::max(worst, std::abs(HingeL2Squared(v, a2) - target) / scale);
    oracle_gap = std::max(oracle_gap,
                          std::abs(a1 - BisectAlpha(v, target, false)));
    oracle_gap = std::max(oracle_gap,
                          std::abs(a2 - BisectAlpha(v, target, true)));
  }
  o.Require(worst < 1e-11, "alpha residual " + Fmt("%.2g", worst));
  o.Require(oracle_gap < 1e-10, "bisection gap " + Fmt("%.2g", oracle_gap));
  return o;
}

double Final(const std::string& game, Algorithm a, int iterations,
             double lambda = 1e-3) {
  RunConfig c = Config(game, a, iterations);
  c.eval_every = iterations;
  c.lambda = lambda;
  return Run(Game(game), c).records.back().exploitability;
}

double Tuned(const std::string& game, Algorithm a, int iterations,
             double* best_lambda) {
  RunConfig c = Config(game, a, iterations);
  c.eval_every = iterations;
  const SweepResult s = Sweep(Game(game), c, DefaultLambdaGrid());
  *best_lambda = s.best_lambda();
  return s.final_exploitability[s.best];
}

Outcome Orderings() {
  Outcome o;
  const int T = 1000;
  double lambda = 0.0;
  const double cfr = Final("leduc", Algorithm::kCfr, T);
  const double cfr_plus = Final("leduc", Algorithm::kCfrPlus, T);
  const double recfr = Tuned("leduc", Algorithm::kRecfr, T, &lambda);
  o.Require(recfr < cfr, "Leduc ReCFR " + Fmt("%.3g", recfr) + " (lambda " +
                             Fmt("%g", lambda) + ") < CFR " + Fmt("%.3g", cfr));
  const double picfr = Tuned("leduc", Algorithm::kPicfr, T, &lambda);
  double omd_lambda = 0.0;
  const double omd = Tuned("leduc", Algorithm::kOmd, T, &omd_lambda);
  o.Require(picfr < omd, "Leduc PICFR " + Fmt("%.3g", picfr) + " (lambda " +
                             Fmt("%g", lambda) + ") < OMD " + Fmt("%.3g", omd) +
                             " (scale " + Fmt("%g", omd_lambda) + ")");
  o.Require(cfr_plus < cfr, "Leduc CFR+ " + Fmt("%.3g", cfr_plus) + " < CFR " +
                                Fmt("%.3g", cfr));
  const double g_picfr = Tuned("goofspiel4", Algorithm::kPicfr, T, &lambda);
  const double g_cfr_plus = Final("goofspiel4", Algorithm::kCfrPlus, T);
  o.Require(g_picfr <= g_cfr_plus,
            "Goofspiel 4 PICFR " + Fmt("%.3g", g_picfr) + " (lambda " +
                Fmt("%g", lambda) + ") <= CFR+ " + Fmt("%.3g", g_cfr_plus));
  return o;
}

Outcome EquilibriumValue() {
  Outcome o;
  RunConfig c = Config("kuhn", Algorithm::kCfrPlus, 10000);
  c.eval_every = 10000;
  const RunResult r = Run(Game("kuhn"), c);
  const double eps = r.records.back().exploitability;
  const double payoff = -Game("kuhn").Player1Loss(r.average[0], r.average[1]);
  o.Require(eps < 1e-3, "Kuhn exploitability " + Fmt("%.3g", eps));
  o.Require(std::abs(payoff + 1.0 / 18.0) < 1e-3,
            "Kuhn player 1 value " + Fmt("%.6f", payoff));
  const SequenceFormGame& rps = Game("rps");
  const double rps_eps = Exploitability(
      rps,
      BehavioralToSequence(rps.treeplex(0),
                           BehavioralStrategy::Uniform(rps.treeplex(0))),
      BehavioralToSequence(rps.treeplex(1),
                           BehavioralStrategy::Uniform(rps.treeplex(1))));
  o.Require(rps_eps == 0.0, "RPS uniform exploitability " + Fmt("%g", rps_eps));
  return o;
}

// Alternating self-play where every iteration rebuilds both ReCFR solvers
// from (t, weighted cumulative loss) and compares against persistent ones.
Outcome Statelessness() {
  Outcome o;
  for (bool predicted : {false, true}) {
    for (const std::string& name : {"kuhn", "leduc"}) {
      const SequenceFormGame& g = Game(name);
      RecfrOptions opts;
      opts.horizon = 300;
      opts.predicted = predicted;
      RecfrSolver persistent[2] = {RecfrSolver(g.treeplex(0), g.loss_context(0), opts),
                                   RecfrSolver(g.treeplex(1), g.loss_context(1), opts)};
      SequenceVector cumulative[2] = {SequenceVector(g.treeplex(0).num_sequences()),
                                      SequenceVector(g.treeplex(1).num_sequences())};
      bool identical = true;
      for (int t = 1; t <= opts.horizon && identical; ++t) {
        const double w = AverageAccumulator::Weight(opts.averaging, t);
        for (int p = 0; p < 2; ++p) {
          const SequenceVector opp = BehavioralToSequence(
              g.treeplex(1 - p), persistent[1 - p].strategy());
          const SequenceVector l = g.LossVector(p, opp);
          for (std::size_t i = 0; i < l.size(); ++i) {
            cumulative[p][i] += w * l[i];
          }
          persistent[p].Update(l, &cumulative[p]);
          RecfrOptions fresh_opts = opts;
          fresh_opts.start_iteration = t - 1;
          RecfrSolver fresh(g.treeplex(p), g.loss_context(p), fresh_opts);
          fresh.Update(l, &cumulative[p]);
          identical = identical && fresh.strategy() == persistent[p].strategy();
        }
      }
      o.Require(identical, std::string(predicted ? "PReCFR " : "ReCFR ") +
                               name + " bitwise");
    }
  }
  return o;
}

Outcome Determinism() {
  Outcome o;
  for (Algorithm a : {Algorithm::kCfrPlus, Algorithm::kRecfr, Algorithm::kPpicfr,
                      Algorithm::kFtrlCfr}) {
    RunConfig c = Config("leduc", a, 300);
    c.timing = Timing::kOff;
    c.seed = 7;
    std::ostringstream first;
    std::ostringstream second;
    Run(c, &first);
    Run(c, &second);
    o.Require(first.str() == second.str() && !first.str().empty(),
              std::string(AlgorithmName(a)) + " " +
                  std::to_string(first.str().size()) + " bytes");
  }
  return o;
}

}  // namespace
}  // namespace cfroco

int main() {
  using cfroco::Algorithm;
  using cfroco::Weighting;
  const std::vector<std::string> four = {"rps", "kuhn", "leduc", "goofspiel4"};
  struct Criterion {
    const char* name;
    std::function<cfroco::Outcome()> check;
  };
  const Criterion criteria[] = {
      {"CFR-RM equals FTRL(CFR) in lockstep, 500 iterations, < 1e-9",
       [&] {
         return cfroco::Lockstep(Algorithm::kCfr, Algorithm::kFtrlCfr,
                                 Weighting::kConstant, four, 500, 1e-9, 60);
       }},
      {"CFR-RM+ equals OMD(CFR) in lockstep, 500 iterations, < 1e-9",
       [&] {
         return cfroco::Lockstep(Algorithm::kCfrRmPlus, Algorithm::kOmdCfr,
                                 Weighting::kConstant, four, 500, 1e-9, 60);
       }},
      {"ReCFR with oracle weights equals CFR-RM, 200 iterations, < 1e-8",
       [&] {
         return cfroco::Lockstep(Algorithm::kCfr, Algorithm::kRecfr,
                                 Weighting::kOracle, {"kuhn", "leduc"}, 200,
                                 1e-8, 0);
       }},
      {"PICFR with oracle weights equals CFR-RM+, 200 iterations, < 1e-8",
       [&] {
         return cfroco::Lockstep(Algorithm::kCfrRmPlus, Algorithm::kPicfr,
                                 Weighting::kOracle, {"kuhn", "leduc"}, 200,
                                 1e-8, 0);
       }},
      {"Game dimensions match the reference table", cfroco::GameSizes},
      {"Property suites (decomposition, norm chains, orthogonality, alpha "
       "solvers)",
       cfroco::PropertySuites},
      {"Convergence orderings at T = 1000 with tuned lambda",
       cfroco::Orderings},
      {"Kuhn CFR+ equilibrium value and RPS uniform profile",
       cfroco::EquilibriumValue},
      {"ReCFR is stateless beyond t and the cumulative loss",
       cfroco::Statelessness},
      {"Identical configs give byte-identical CSV", cfroco::Determinism},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    cfroco::Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d. %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", index,
                c.name, cfroco::Seconds(start), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
