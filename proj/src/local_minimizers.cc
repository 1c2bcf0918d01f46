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
#include <stdexcept>
#include <vector>

namespace cfroco {

namespace {

void FillUniform(std::span<double> x) {
  const double u = 1.0 / static_cast<double>(x.size());
  std::fill(x.begin(), x.end(), u);
}

// Values sorted ascending with ties broken by index, so the scans below are
// deterministic.
template <typename T>
std::vector<T> SortedValues(std::span<const T> v) {
  std::vector<int> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return v[a] < v[b] || (v[a] == v[b] && a < b);
  });
  std::vector<T> sorted(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = v[idx[i]];
  return sorted;
}

template <typename T>
void CheckTarget(std::span<const T> v, T target) {
  if (v.empty()) throw std::invalid_argument("alpha solve on empty vector");
  if (!(target > 0.0)) {
    throw std::invalid_argument("alpha solve needs a positive target");
  }
}

template <typename T>
T SolveAlphaL1Impl(std::span<const T> v, T target) {
  CheckTarget(v, target);
  const std::vector<T> s = SortedValues(v);
  const std::size_t n = s.size();
  T prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += s[k - 1];
    const T alpha = (target + prefix) / static_cast<T>(k);
    if (k == n || alpha <= s[k]) return alpha;
  }
  return s.back();  // unreachable
}

template <typename T>
T HingeL1Impl(std::span<const T> v, T alpha) {
  T sum = 0;
  for (T e : v) sum += std::max<T>(alpha - e, 0);
  return sum;
}

}  // namespace

bool PositivePartNormalize(std::span<const double> v, std::span<double> x) {
  double norm = 0.0;
  for (double e : v) norm += std::max(e, 0.0);
  if (!(norm > 0.0)) {
    FillUniform(x);
    return false;
  }
  for (std::size_t a = 0; a < v.size(); ++a) x[a] = std::max(v[a], 0.0) / norm;
  return true;
}

bool RmUpdate(std::span<double> cumulative, std::span<const double> inst,
              std::span<double> strategy) {
  for (std::size_t a = 0; a < cumulative.size(); ++a) cumulative[a] += inst[a];
  return PositivePartNormalize(cumulative, strategy);
}

bool RmPlusUpdate(std::span<double> q, std::span<const double> inst,
                  std::span<double> strategy) {
  for (std::size_t a = 0; a < q.size(); ++a) {
    q[a] = std::max(q[a] + inst[a], 0.0);
  }
  return PositivePartNormalize(q, strategy);
}

double SolveAlphaL1(std::span<const double> v, double target) {
  return SolveAlphaL1Impl(v, target);
}

long double SolveAlphaL1(std::span<const long double> v, long double target) {
  return SolveAlphaL1Impl(v, target);
}

double SolveAlphaL2(std::span<const double> v, double target) {
  CheckTarget(v, target);
  const std::vector<double> s = SortedValues(v);
  const std::size_t n = s.size();
  // Running mean and sum of squared deviations of the k smallest values, so
  // f_k(alpha) = k (alpha - mean)^2 + m2 on the k-th segment.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double delta = s[k - 1] - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (s[k - 1] - mean);
    const double kd = static_cast<double>(k);
    if (k < n) {
      const double gap = s[k] - mean;
      if (target > kd * gap * gap + m2) continue;
    }
    return mean + std::sqrt(std::max(target - m2, 0.0) / kd);
  }
  return s.back();  // unreachable
}

double HingeL1(std::span<const double> v, double alpha) {
  return HingeL1Impl(v, alpha);
}

long double HingeL1(std::span<const long double> v, long double alpha) {
  return HingeL1Impl(v, alpha);
}

double HingeL2Squared(std::span<const double> v, double alpha) {
  double sum = 0.0;
  for (double e : v) {
    const double h = std::max(alpha - e, 0.0);
    sum += h * h;
  }
  return sum;
}

}  // namespace cfroco
