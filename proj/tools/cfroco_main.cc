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

// Command-line driver.
//
//   cfroco --game leduc --algo recfr --iters 1000 --lambda 1e-3 --out t.csv
//   cfroco --game kuhn --algo cfr --compare ftrl_cfr --iters 500
//   cfroco --game leduc --algo picfr --sweep 0.1,0.01,0.001
//   cfroco --config run.toml --iters 200

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfroco/games.h"
#include "cfroco/harness.h"
#include "cfroco/sequence_form.h"

namespace {

using cfroco::RunConfig;

struct Flags {
  std::string game = "kuhn";
  std::string algo = "cfr";
  int iters = 1000;
  std::string avg;
  std::string weighting = "constant";
  double lambda = 1e-3;
  double epsilon_init = 0.0;
  int eval_every = 0;
  std::string order = "alt";
  std::uint64_t seed = 0;
  std::string out;
  std::string compare;
  std::vector<double> sweep;
  std::string timing = "wall";
};

RunConfig ToConfig(const Flags& f) {
  RunConfig c;
  c.game = f.game;
  c.algorithm = cfroco::ParseAlgorithm(f.algo);
  c.iterations = f.iters;
  if (!f.avg.empty()) c.averaging = cfroco::ParseAveraging(f.avg);
  c.weighting = cfroco::ParseWeighting(f.weighting);
  c.lambda = f.lambda;
  if (f.epsilon_init > 0.0) c.epsilon_init = f.epsilon_init;
  if (f.eval_every > 0) c.eval_every = f.eval_every;
  c.order = cfroco::ParseUpdateOrder(f.order);
  c.seed = f.seed;
  c.output = f.out;
  c.timing = cfroco::ParseTiming(f.timing);
  return c;
}

int Main(const Flags& flags) {
  const RunConfig config = ToConfig(flags);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      std::cerr << "cannot open " << config.output << "\n";
      return 1;
    }
    out = &file;
  }
  const cfroco::SequenceFormGame game(cfroco::BuildGame(config.game));

  if (!flags.compare.empty()) {
    RunConfig base = config;
    RunConfig other = config;
    other.algorithm = cfroco::ParseAlgorithm(flags.compare);
    other.averaging.reset();
    // Oracle weighting goes to whichever side supports it.
    for (RunConfig* c : {&base, &other}) {
      if (c->weighting == cfroco::Weighting::kOracle &&
          c->algorithm != cfroco::Algorithm::kRecfr &&
          c->algorithm != cfroco::Algorithm::kPicfr) {
        c->weighting = cfroco::Weighting::kConstant;
      }
    }
    const auto r = cfroco::LockstepCompare(game, base, other, out);
    std::cerr << "max_divergence " << r.max_divergence << "\n";
    return 0;
  }

  if (!flags.sweep.empty()) {
    const auto s = cfroco::Sweep(game, config, flags.sweep);
    std::cerr << "lambda,final_exploitability\n";
    for (std::size_t i = 0; i < s.lambdas.size(); ++i) {
      std::fprintf(stderr, "%.17g,%.17g\n", s.lambdas[i],
                   s.final_exploitability[i]);
    }
    std::fprintf(stderr, "best_lambda %.17g\n", s.best_lambda());
    RunConfig best = config;
    best.lambda = s.best_lambda();
    cfroco::Run(game, best, out);
    return 0;
  }

  cfroco::Run(game, config, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regret minimization solvers for two-player zero-sum games"};
  app.set_config("--config", "", "TOML/INI file mirroring the flags");
  Flags f;
  app.add_option("--game", f.game, "Game spec, e.g. kuhn, leduc, goofspiel4");
  app.add_option("--algo", f.algo, "Algorithm")
      ->check(CLI::IsMember({"cfr", "cfr_rm_plus", "cfr_plus", "lcfr", "pcfr",
                             "pcfr_plus", "ftrl", "omd", "ftrl_cfr", "omd_cfr",
                             "recfr", "picfr", "precfr", "ppicfr"}));
  app.add_option("--iters", f.iters, "Iterations T")->check(CLI::PositiveNumber);
  app.add_option("--avg", f.avg, "Averaging")
      ->check(CLI::IsMember({"uniform", "linear"}));
  app.add_option("--weighting", f.weighting, "Weight schedule")
      ->check(CLI::IsMember({"constant", "linear", "oracle", "experimental"}));
  app.add_option("--lambda", f.lambda, "Schedule weight lambda");
  app.add_option("--epsilon-init", f.epsilon_init,
                 "Initial regret epsilon (default 1e-6 * L)");
  app.add_option("--eval-every", f.eval_every,
                 "Evaluation period (default ceil(T/200))");
  app.add_option("--order", f.order, "Update order")
      ->check(CLI::IsMember({"alt", "sim"}));
  app.add_option("--seed", f.seed, "Seed (all solvers are deterministic)");
  app.add_option("--out", f.out, "CSV output path (default stdout)");
  app.add_option("--compare", f.compare, "Second algorithm for lockstep mode");
  app.add_option("--sweep", f.sweep, "Comma-separated lambda grid")
      ->delimiter(',');
  app.add_option("--timing", f.timing, "wall or off")
      ->check(CLI::IsMember({"wall", "off"}));
  CLI11_PARSE(app, argc, argv);
  try {
    return Main(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
