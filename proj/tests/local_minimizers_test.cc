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

#include "cfroco/local_minimizers.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace cfroco {
namespace {

// Bisection on the monotone hinge h(alpha) = sum [alpha - v]^+^p.
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
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (h(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(RmTest, PositivePartNormalization) {
  std::vector<double> r = {2.0, -1.0, 3.0};
  std::vector<double> x(3);
  EXPECT_TRUE(PositivePartNormalize(r, x));
  EXPECT_DOUBLE_EQ(x[0], 0.4);
  EXPECT_DOUBLE_EQ(x[1], 0.0);
  EXPECT_DOUBLE_EQ(x[2], 0.6);
}

TEST(RmTest, UpdateAddsRegret) {
  std::vector<double> cumulative = {1.0, -1.0, 1.0};
  const std::vector<double> inst = {1.0, 0.0, 2.0};
  std::vector<double> x(3);
  EXPECT_TRUE(RmUpdate(cumulative, inst, x));
  EXPECT_EQ(cumulative, (std::vector<double>{2.0, -1.0, 3.0}));
  EXPECT_DOUBLE_EQ(x[0], 0.4);
  EXPECT_DOUBLE_EQ(x[2], 0.6);
}

TEST(RmTest, SymmetricRegretsGiveUniform) {
  for (double c : {1e-9, 1.0, 1e6}) {
    std::vector<double> r = {c, c};
    std::vector<double> x(2);
    EXPECT_TRUE(PositivePartNormalize(r, x));
    EXPECT_DOUBLE_EQ(x[0], 0.5);
    EXPECT_DOUBLE_EQ(x[1], 0.5);
  }
}

TEST(RmTest, NonPositiveFallsBackToUniform) {
  std::vector<double> cumulative = {-1.0, 0.0, -2.0};
  const std::vector<double> inst = {0.0, 0.0, 0.0};
  std::vector<double> x(3);
  EXPECT_FALSE(RmUpdate(cumulative, inst, x));
  for (double e : x) EXPECT_DOUBLE_EQ(e, 1.0 / 3.0);
}

TEST(RmPlusTest, Example) {
  std::vector<double> q = {1.0, 0.0};
  const std::vector<double> inst = {-2.0, 1.0};
  std::vector<double> x(2);
  EXPECT_TRUE(RmPlusUpdate(q, inst, x));
  EXPECT_EQ(q, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(x, (std::vector<double>{0.0, 1.0}));
}

TEST(RmPlusTest, ZeroRegretKeepsState) {
  std::vector<double> q = {0.25, 0.75, 1.0};
  const std::vector<double> zero(3, 0.0);
  std::vector<double> x(3);
  EXPECT_TRUE(RmPlusUpdate(q, zero, x));
  EXPECT_EQ(q, (std::vector<double>{0.25, 0.75, 1.0}));
  EXPECT_DOUBLE_EQ(x[0], 0.125);
}

TEST(RmPlusTest, StateStaysNonNegativeAndOutputsSimplex) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> q(4, 0.1);
  std::vector<double> r(4);
  std::vector<double> x(4);
  for (int t = 0; t < 1000; ++t) {
    for (double& e : r) e = n(rng);
    if (RmPlusUpdate(q, r, x)) {
      double sum = 0.0;
      for (double e : x) sum += e;
      ASSERT_NEAR(sum, 1.0, 1e-12);
    }
    for (double e : q) ASSERT_GE(e, 0.0);
  }
}

TEST(SolveAlphaL1Test, Examples) {
  EXPECT_DOUBLE_EQ(SolveAlphaL1(std::vector<double>{0.0, 0.0}, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(SolveAlphaL1(std::vector<double>{1.0, 3.0}, 2.0), 3.0);
  // Water filling around (1, 3) with budget 5.
  EXPECT_DOUBLE_EQ(SolveAlphaL1(std::vector<double>{1.0, 3.0}, 5.0), 4.5);
}

TEST(SolveAlphaL1Test, RejectsBadInput) {
  EXPECT_THROW(SolveAlphaL1(std::vector<double>{}, 1.0), std::invalid_argument);
  EXPECT_THROW(SolveAlphaL1(std::vector<double>{1.0}, 0.0),
               std::invalid_argument);
  EXPECT_THROW(SolveAlphaL1(std::vector<double>{1.0}, -1.0),
               std::invalid_argument);
}

TEST(SolveAlphaL2Test, Examples) {
  for (double lambda : {1e-6, 0.5, 2.0, 1e4}) {
    EXPECT_NEAR(SolveAlphaL2(std::vector<double>{0.0, 0.0}, lambda),
                std::sqrt(lambda / 2.0), 1e-15 * std::max(1.0, lambda));
  }
  EXPECT_DOUBLE_EQ(SolveAlphaL2(std::vector<double>{1.0, 3.0}, 4.0), 3.0);
}

TEST(SolveAlphaL2Test, RejectsBadInput) {
  EXPECT_THROW(SolveAlphaL2(std::vector<double>{}, 1.0), std::invalid_argument);
  EXPECT_THROW(SolveAlphaL2(std::vector<double>{2.0}, 0.0),
               std::invalid_argument);
}

TEST(SolveAlphaTest, RandomInstancesAgainstBisection) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> log_target(-6.0, 4.0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> v(size(rng));
    for (double& e : v) e = value(rng);
    const double target = std::pow(10.0, log_target(rng));
    const double scale = std::max(1.0, target);

    const double a1 = SolveAlphaL1(v, target);
    ASSERT_LT(std::abs(HingeL1(v, a1) - target), 1e-11 * scale);
    ASSERT_NEAR(a1, BisectAlpha(v, target, false), 1e-10);

    const double a2 = SolveAlphaL2(v, target);
    ASSERT_LT(std::abs(HingeL2Squared(v, a2) - target), 1e-11 * scale);
    ASSERT_NEAR(a2, BisectAlpha(v, target, true), 1e-10);
  }
}

TEST(SolveAlphaTest, MonotoneInTarget) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(5);
    for (double& e : v) e = value(rng);
    double prev1 = -1e300;
    double prev2 = -1e300;
    for (double target = 0.01; target < 100.0; target *= 1.7) {
      const double a1 = SolveAlphaL1(v, target);
      const double a2 = SolveAlphaL2(v, target);
      ASSERT_GT(a1, prev1);
      ASSERT_GT(a2, prev2);
      prev1 = a1;
      prev2 = a2;
    }
  }
}

TEST(SolveAlphaTest, TiesAreDeterministic) {
  const std::vector<double> v = {2.0, 2.0, 2.0};
  EXPECT_DOUBLE_EQ(SolveAlphaL1(v, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(SolveAlphaL2(v, 3.0), 3.0);
}

TEST(SolveAlphaTest, ExtendedPrecisionMatchesDouble) {
  const std::vector<long double> v = {1.0L, 3.0L};
  EXPECT_EQ(SolveAlphaL1(std::span<const long double>(v), 5.0L), 4.5L);
  EXPECT_EQ(HingeL1(std::span<const long double>(v), 4.5L), 5.0L);
}

}  // namespace
}  // namespace cfroco
