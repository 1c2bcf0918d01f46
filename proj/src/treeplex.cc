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

#include "cfroco/treeplex.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cfroco {

Treeplex::Treeplex(const std::vector<DecisionPointSpec>& specs) {
  const int n = static_cast<int>(specs.size());
  if (n == 0) throw std::invalid_argument("treeplex needs a decision point");

  // children_in[i][a] = input indices of points whose parent is (i, a).
  std::vector<std::vector<std::vector<int>>> children_in(n);
  std::vector<int> roots_in;
  for (int i = 0; i < n; ++i) {
    if (specs[i].num_actions < 1) {
      throw std::invalid_argument("decision point " + std::to_string(i) +
                                  " has no actions");
    }
    children_in[i].resize(specs[i].num_actions);
  }
  for (int i = 0; i < n; ++i) {
    const auto& parent = specs[i].parent;
    if (!parent) {
      roots_in.push_back(i);
      continue;
    }
    if (parent->decision_point < 0 || parent->decision_point >= n ||
        parent->action < 0 ||
        parent->action >= specs[parent->decision_point].num_actions) {
      throw std::invalid_argument("decision point " + std::to_string(i) +
                                  " has an invalid parent sequence");
    }
    children_in[parent->decision_point][parent->action].push_back(i);
  }
  if (roots_in.empty()) throw std::invalid_argument("treeplex has a cycle");

  // Iterative post-order so children precede parents.
  std::vector<std::vector<int>> flat_children(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& c : children_in[i]) {
      flat_children[i].insert(flat_children[i].end(), c.begin(), c.end());
    }
  }
  input_to_id_.assign(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int r : roots_in) {
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < flat_children[node].size()) {
        const int child = flat_children[node][next++];
        stack.emplace_back(child, 0);
      } else {
        input_to_id_[node] = static_cast<int>(order.size());
        order.push_back(node);
        stack.pop_back();
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("treeplex has a cycle");
  }

  points_.resize(n);
  int slot = 0;
  for (int id = 0; id < n; ++id) {
    const int in = order[id];
    auto& p = points_[id];
    p.id = id;
    p.num_actions = specs[in].num_actions;
    p.first_slot = slot;
    slot += p.num_actions;
    max_actions_ = std::max(max_actions_, p.num_actions);
    p.children.resize(p.num_actions);
    for (int a = 0; a < p.num_actions; ++a) {
      for (int c : children_in[in][a]) p.children[a].push_back(input_to_id_[c]);
    }
  }
  num_sequences_ = slot;
  slot_owner_.resize(num_sequences_);
  for (const auto& p : points_) {
    for (int a = 0; a < p.num_actions; ++a) slot_owner_[p.slot(a)] = p.id;
    for (int a = 0; a < p.num_actions; ++a) {
      for (int c : p.children[a]) points_[c].parent_slot = p.slot(a);
    }
  }
  for (int r : roots_in) roots_.push_back(input_to_id_[r]);
  std::sort(roots_.begin(), roots_.end());
}

SequenceVector& SequenceVector::operator+=(const SequenceVector& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("sequence vector size mismatch");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other[i];
  return *this;
}

SequenceVector& SequenceVector::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  return *this;
}

double Dot(const SequenceVector& a, const SequenceVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sequence vector size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

BehavioralStrategy BehavioralStrategy::Uniform(const Treeplex& tp) {
  std::vector<double> local(tp.num_sequences());
  for (const auto& j : tp.decision_points()) {
    for (int a = 0; a < j.num_actions; ++a) {
      local[j.slot(a)] = 1.0 / j.num_actions;
    }
  }
  return BehavioralStrategy(std::move(local));
}

void ValidateBehavioral(const Treeplex& tp, const BehavioralStrategy& b) {
  if (static_cast<int>(b.size()) != tp.num_sequences()) {
    throw std::invalid_argument("behavioral strategy has wrong dimension");
  }
  for (const auto& j : tp.decision_points()) {
    double sum = 0.0;
    for (double v : b.at(j)) {
      if (v < 0.0 || !std::isfinite(v)) {
        throw std::invalid_argument("behavioral strategy has a bad entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kStructuralTolerance) {
      throw std::invalid_argument("local decision at " + std::to_string(j.id) +
                                  " is off the simplex");
    }
  }
}

namespace {

void CheckDimension(const Treeplex& tp, std::size_t size, const char* what) {
  if (static_cast<int>(size) != tp.num_sequences()) {
    throw std::invalid_argument(std::string(what) + " has wrong dimension");
  }
}

double ParentMass(const DecisionPointMeta& j, const SequenceVector& x) {
  return j.parent_slot ? x[*j.parent_slot] : 1.0;
}

}  // namespace

SequenceVector BehavioralToSequence(const Treeplex& tp,
                                    const BehavioralStrategy& b) {
  CheckDimension(tp, b.size(), "behavioral strategy");
  SequenceVector x(tp.num_sequences());
  const auto& points = tp.decision_points();
  for (auto it = points.rbegin(); it != points.rend(); ++it) {
    const double reach = ParentMass(*it, x);
    for (int a = 0; a < it->num_actions; ++a) {
      x[it->slot(a)] = reach * b[it->slot(a)];
    }
  }
  return x;
}

double MaxFlowResidual(const Treeplex& tp, const SequenceVector& x) {
  CheckDimension(tp, x.size(), "sequence vector");
  double worst = 0.0;
  for (const auto& j : tp.decision_points()) {
    double sum = 0.0;
    for (double v : x.slice(j)) sum += v;
    worst = std::max(worst, std::abs(sum - ParentMass(j, x)));
  }
  return worst;
}

BehavioralStrategy SequenceToBehavioral(const Treeplex& tp,
                                        const SequenceVector& x) {
  CheckDimension(tp, x.size(), "sequence vector");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0.0) throw std::invalid_argument("negative sequence mass");
  }
  if (MaxFlowResidual(tp, x) > kFlowTolerance) {
    throw std::invalid_argument("sequence vector violates flow constraints");
  }
  std::vector<double> local(tp.num_sequences());
  for (const auto& j : tp.decision_points()) {
    const double reach = ParentMass(j, x);
    for (int a = 0; a < j.num_actions; ++a) {
      local[j.slot(a)] =
          reach > 0.0 ? x[j.slot(a)] / reach : 1.0 / j.num_actions;
    }
  }
  return BehavioralStrategy(std::move(local));
}

double CounterfactualLosses::root_value(const Treeplex& tp) const {
  double sum = 0.0;
  for (int r : tp.roots()) sum += values[r];
  return sum;
}

void ComputeCounterfactualLossesInto(const Treeplex& tp,
                                     const SequenceVector& loss,
                                     const BehavioralStrategy& b,
                                     CounterfactualLosses& out) {
  CheckDimension(tp, loss.size(), "loss vector");
  CheckDimension(tp, b.size(), "behavioral strategy");
  out.action_losses = loss;
  out.values.assign(tp.num_decision_points(), 0.0);
  for (const auto& j : tp.decision_points()) {
    double value = 0.0;
    for (int a = 0; a < j.num_actions; ++a) {
      double& la = out.action_losses[j.slot(a)];
      for (int c : j.children[a]) la += out.values[c];
      value += la * b[j.slot(a)];
    }
    out.values[j.id] = value;
  }
}

CounterfactualLosses ComputeCounterfactualLosses(const Treeplex& tp,
                                                 const SequenceVector& loss,
                                                 const BehavioralStrategy& b) {
  CounterfactualLosses out;
  ComputeCounterfactualLossesInto(tp, loss, b, out);
  return out;
}

SequenceVector InstantaneousRegrets(const Treeplex& tp,
                                    const CounterfactualLosses& cf) {
  SequenceVector r(tp.num_sequences());
  for (const auto& j : tp.decision_points()) {
    for (int a = 0; a < j.num_actions; ++a) {
      r[j.slot(a)] = cf.values[j.id] - cf.action_losses[j.slot(a)];
    }
  }
  return r;
}

double RegretDecompositionResidual(const Treeplex& tp,
                                   const SequenceVector& loss,
                                   const BehavioralStrategy& b,
                                   const BehavioralStrategy& b_prime) {
  const SequenceVector x = BehavioralToSequence(tp, b);
  const SequenceVector x_prime = BehavioralToSequence(tp, b_prime);
  const CounterfactualLosses cf = ComputeCounterfactualLosses(tp, loss, b);
  const SequenceVector r = InstantaneousRegrets(tp, cf);
  double decomposed = 0.0;
  for (const auto& j : tp.decision_points()) {
    double local = 0.0;
    for (int a = 0; a < j.num_actions; ++a) {
      local += r[j.slot(a)] * b_prime[j.slot(a)];
    }
    decomposed += ParentMass(j, x_prime) * local;
  }
  return std::abs(Dot(loss, x) - Dot(loss, x_prime) - decomposed);
}

}  // namespace cfroco
