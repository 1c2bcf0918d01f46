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

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cfroco/cfr.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cfroco {
namespace {

using testing::Game;
using testing::RandomBehavioral;

SequenceVector UniformSequence(const Treeplex& tp) {
  return BehavioralToSequence(tp, BehavioralStrategy::Uniform(tp));
}

SequenceVector RandomSequence(const Treeplex& tp, std::mt19937_64& rng) {
  return BehavioralToSequence(tp, RandomBehavioral(tp, rng));
}

TEST(BestResponseTest, RpsAgainstUniform) {
  const SequenceFormGame& g = Game("rps");
  const auto br =
      BestResponse(g.treeplex(0), g.LossVector(0, UniformSequence(g.treeplex(1))));
  EXPECT_EQ(br.value, 0.0);
  EXPECT_EQ(br.strategy[0], 1.0);  // lowest index wins the three-way tie
}

TEST(BestResponseTest, RpsAgainstRockIsPaper) {
  const SequenceFormGame& g = Game("rps");
  const auto br = BestResponse(
      g.treeplex(0), g.LossVector(0, SequenceVector(std::vector<double>{1, 0, 0})));
  EXPECT_EQ(br.value, -1.0);
  EXPECT_EQ(br.strategy.values(), (std::vector<double>{0.0, 1.0, 0.0}));
}

TEST(BestResponseTest, KuhnAgainstUniformMatchesBruteForce) {
  const SequenceFormGame& g = Game("kuhn");
  const SequenceVector l = g.LossVector(0, UniformSequence(g.treeplex(1)));
  const auto br = BestResponse(g.treeplex(0), l);
  const auto brute = BruteForceBestResponse(g.treeplex(0), l);
  EXPECT_NEAR(br.value, brute.value, 1e-12);
  EXPECT_NEAR(Dot(l, BehavioralToSequence(g.treeplex(0), br.strategy)),
              br.value, 1e-12);
}

TEST(BestResponseTest, BruteForceAgreesOnRandomKuhnOpponents) {
  std::mt19937_64 rng(97);
  const SequenceFormGame& g = Game("kuhn");
  for (int p = 0; p < 2; ++p) {
    for (int trial = 0; trial < 20; ++trial) {
      const SequenceVector l =
          g.LossVector(p, RandomSequence(g.treeplex(1 - p), rng));
      EXPECT_NEAR(BestResponse(g.treeplex(p), l).value,
                  BruteForceBestResponse(g.treeplex(p), l).value, 1e-12);
    }
  }
}

TEST(BestResponseTest, BruteForceAgreesOnRps) {
  std::mt19937_64 rng(101);
  const SequenceFormGame& g = Game("rps");
  const SequenceVector l = g.LossVector(0, RandomSequence(g.treeplex(1), rng));
  EXPECT_EQ(BestResponse(g.treeplex(0), l).value,
            BruteForceBestResponse(g.treeplex(0), l).value);
}

TEST(BestResponseTest, BruteForceAgreesOnSyntheticTreeplexes) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    // Two levels: a root and up to three children.
    std::uniform_int_distribution<int> kids(0, 3);
    std::uniform_int_distribution<int> actions(2, 3);
    std::vector<DecisionPointSpec> specs = {{actions(rng), std::nullopt}};
    const int n = kids(rng);
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<int> a(0, specs[0].num_actions - 1);
      specs.push_back({actions(rng), Sequence{0, a(rng)}});
    }
    const Treeplex tp(specs);
    const SequenceVector l = testing::RandomVector(tp.num_sequences(), rng);
    ASSERT_NEAR(BestResponse(tp, l).value, BruteForceBestResponse(tp, l).value,
                1e-12);
  }
}

TEST(BestResponseTest, BruteForceRejectsLargeTreeplexes) {
  const Treeplex& tp = Game("leduc").treeplex(0);
  EXPECT_THROW(BruteForceBestResponse(tp, SequenceVector(tp.num_sequences())),
               std::invalid_argument);
}

TEST(ExploitabilityTest, UniformRpsIsExactlyZero) {
  const SequenceFormGame& g = Game("rps");
  EXPECT_EQ(Exploitability(g, UniformSequence(g.treeplex(0)),
                           UniformSequence(g.treeplex(1))),
            0.0);
}

TEST(ExploitabilityTest, UniformKuhnIsPositive) {
  const SequenceFormGame& g = Game("kuhn");
  const SequenceVector x = UniformSequence(g.treeplex(0));
  const SequenceVector y = UniformSequence(g.treeplex(1));
  const EvalReport r = Evaluate(g, x, y);
  EXPECT_GT(r.exploitability, 0.0);
  const double br1 = BruteForceBestResponse(g.treeplex(0), g.LossVector(0, y)).value;
  const double br2 = BruteForceBestResponse(g.treeplex(1), g.LossVector(1, x)).value;
  EXPECT_NEAR(r.exploitability, -br1 - br2, 1e-12);
  EXPECT_NEAR(r.gap1 + r.gap2, r.exploitability, 1e-12);
}

TEST(ExploitabilityTest, NonNegativeOnRandomProfiles) {
  std::mt19937_64 rng(107);
  for (const std::string& name : testing::DeskGames()) {
    const SequenceFormGame& g = Game(name);
    const int trials = name == "goofspiel4" ? 200 : 1000;
    for (int trial = 0; trial < trials; ++trial) {
      const EvalReport r = Evaluate(g, RandomSequence(g.treeplex(0), rng),
                                    RandomSequence(g.treeplex(1), rng));
      ASSERT_GE(r.exploitability, -1e-9) << name;
      ASSERT_GE(r.gap1, -1e-9) << name;
      ASSERT_GE(r.gap2, -1e-9) << name;
    }
  }
}

TEST(ExploitabilityTest, BestResponseIsTight) {
  std::mt19937_64 rng(109);
  const SequenceFormGame& g = Game("leduc");
  const SequenceVector y = RandomSequence(g.treeplex(1), rng);
  const auto br = BestResponse(g.treeplex(0), g.LossVector(0, y));
  const EvalReport r =
      Evaluate(g, BehavioralToSequence(g.treeplex(0), br.strategy), y);
  EXPECT_NEAR(r.gap1, 0.0, 1e-10);
}

// Total regret against the realized best response, through the per-point
// decomposition.
double DecomposedRegret(const Treeplex& tp,
                        const std::vector<SequenceVector>& losses,
                        const std::vector<BehavioralStrategy>& played,
                        const BehavioralStrategy& comparator) {
  const SequenceVector xc = BehavioralToSequence(tp, comparator);
  double total = 0.0;
  for (std::size_t t = 0; t < losses.size(); ++t) {
    const auto cf = ComputeCounterfactualLosses(tp, losses[t], played[t]);
    for (const auto& j : tp.decision_points()) {
      const double reach = j.parent_slot ? xc[*j.parent_slot] : 1.0;
      for (int a = 0; a < j.num_actions; ++a) {
        total += reach * (cf.values[j.id] - cf.action_losses[j.slot(a)]) *
                 comparator[j.slot(a)];
      }
    }
  }
  return total;
}

TEST(ExploitabilityTest, EqualsAverageRegretForSimultaneousUniformRuns) {
  const SequenceFormGame& g = Game("kuhn");
  CfrSolver s[2] = {CfrSolver(g.treeplex(0), CfrOptions{}),
                    CfrSolver(g.treeplex(1), CfrOptions{})};
  AverageAccumulator avg[2] = {
      AverageAccumulator(g.treeplex(0).num_sequences(), Averaging::kUniform),
      AverageAccumulator(g.treeplex(1).num_sequences(), Averaging::kUniform)};
  std::vector<SequenceVector> losses[2];
  std::vector<BehavioralStrategy> played[2];
  const int T = 100;
  for (int t = 1; t <= T; ++t) {
    SequenceVector seq[2];
    for (int p = 0; p < 2; ++p) {
      seq[p] = BehavioralToSequence(g.treeplex(p), s[p].strategy());
      avg[p].Add(seq[p], t);
      played[p].push_back(s[p].strategy());
    }
    for (int p = 0; p < 2; ++p) {
      losses[p].push_back(g.LossVector(p, seq[1 - p]));
      s[p].Update(losses[p].back(), nullptr);
    }
  }
  const SequenceVector x = avg[0].Extract();
  const SequenceVector y = avg[1].Extract();
  const auto br1 = BestResponse(g.treeplex(0), g.LossVector(0, y));
  const auto br2 = BestResponse(g.treeplex(1), g.LossVector(1, x));
  const double rx = DecomposedRegret(g.treeplex(0), losses[0], played[0], br1.strategy);
  const double ry = DecomposedRegret(g.treeplex(1), losses[1], played[1], br2.strategy);
  EXPECT_NEAR(Exploitability(g, x, y), (rx + ry) / T, 1e-7);
}

}  // namespace
}  // namespace cfroco
