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

#ifndef CFROCO_TREEPLEX_H_
#define CFROCO_TREEPLEX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfroco {

// Tolerances shared by every module.
inline constexpr double kStructuralTolerance = 1e-12;
inline constexpr double kFlowTolerance = 1e-9;

// A (decision point, action) pair, addressed through its flat slot index.
struct Sequence {
  int decision_point = -1;
  int action = -1;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

struct DecisionPointMeta {
  int id = 0;
  int num_actions = 0;
  // Flat slot index of the parent sequence; absent for parentless points.
  std::optional<int> parent_slot;
  // children[a] lists the decision points reached right after playing a.
  std::vector<std::vector<int>> children;
  int first_slot = 0;

  int slot(int action) const { return first_slot + action; }
};

// Input description of one decision point, used to build a Treeplex. Parent
// references use the caller's indexing of the input vector.
struct DecisionPointSpec {
  int num_actions = 0;
  std::optional<Sequence> parent;
};

// One player's sequential decision process.
//
// Decision points are stored in an order where every child comes before its
// parent, so that all bottom-up recursions are a single forward pass over
// `decision_points()` and all top-down recursions a single reverse pass.
// Immutable after construction.
class Treeplex {
 public:
  // Builds the treeplex from specs in arbitrary order. Throws
  // std::invalid_argument on cycles, dangling parents or empty action sets.
  explicit Treeplex(const std::vector<DecisionPointSpec>& specs);

  const std::vector<DecisionPointMeta>& decision_points() const {
    return points_;
  }
  const DecisionPointMeta& point(int j) const { return points_[j]; }
  int num_decision_points() const { return static_cast<int>(points_.size()); }
  int num_sequences() const { return num_sequences_; }
  // Parentless decision points. A single entry is the usual case; games insert
  // a one-action dummy root when a player would otherwise have several.
  const std::vector<int>& roots() const { return roots_; }
  int root() const { return roots_.front(); }

  // Maps the index used in the constructor input to the stored id.
  int id_of_input(int input_index) const { return input_to_id_[input_index]; }
  // Decision point owning a flat slot.
  int owner_of_slot(int slot) const { return slot_owner_[slot]; }
  int max_actions() const { return max_actions_; }

 private:
  std::vector<DecisionPointMeta> points_;
  std::vector<int> roots_;
  std::vector<int> input_to_id_;
  std::vector<int> slot_owner_;
  int num_sequences_ = 0;
  int max_actions_ = 0;
};

// Flat vector indexed by sequence slots. Holds sequence-form strategies,
// losses and cumulative losses.
class SequenceVector {
 public:
  SequenceVector() = default;
  explicit SequenceVector(std::size_t size, double fill = 0.0)
      : values_(size, fill) {}
  explicit SequenceVector(std::vector<double> values)
      : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<double> slice(const DecisionPointMeta& j) {
    return std::span<double>(values_).subspan(j.first_slot, j.num_actions);
  }
  std::span<const double> slice(const DecisionPointMeta& j) const {
    return std::span<const double>(values_).subspan(j.first_slot,
                                                    j.num_actions);
  }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  SequenceVector& operator+=(const SequenceVector& other);
  SequenceVector& operator*=(double scale);

  friend bool operator==(const SequenceVector&,
                         const SequenceVector&) = default;

 private:
  std::vector<double> values_;
};

double Dot(const SequenceVector& a, const SequenceVector& b);

// Local decisions x̂_j, one simplex point per decision point, stored with the
// same flat slot layout as SequenceVector.
class BehavioralStrategy {
 public:
  BehavioralStrategy() = default;
  explicit BehavioralStrategy(std::vector<double> local)
      : local_(std::move(local)) {}

  static BehavioralStrategy Uniform(const Treeplex& tp);

  std::size_t size() const { return local_.size(); }
  double& operator[](std::size_t slot) { return local_[slot]; }
  double operator[](std::size_t slot) const { return local_[slot]; }
  std::span<double> at(const DecisionPointMeta& j) {
    return std::span<double>(local_).subspan(j.first_slot, j.num_actions);
  }
  std::span<const double> at(const DecisionPointMeta& j) const {
    return std::span<const double>(local_).subspan(j.first_slot,
                                                   j.num_actions);
  }
  const std::vector<double>& values() const { return local_; }

  friend bool operator==(const BehavioralStrategy&,
                         const BehavioralStrategy&) = default;

 private:
  std::vector<double> local_;
};

// Throws std::invalid_argument if b is not a product of simplex points
// (1e-12 on the sums, no negative entries).
void ValidateBehavioral(const Treeplex& tp, const BehavioralStrategy& b);

// Top-down product: [x]_{ja} = x_{p_j} [x̂_j]_a.
SequenceVector BehavioralToSequence(const Treeplex& tp,
                                    const BehavioralStrategy& b);

// x̂_j = [x]_j / x_{p_j}; points with zero reach get the uniform decision.
// Throws on negative entries or on a flow violation above 1e-9.
BehavioralStrategy SequenceToBehavioral(const Treeplex& tp,
                                        const SequenceVector& x);

// Largest |Σ_a [x]_{ja} - x_{p_j}| over decision points.
double MaxFlowResidual(const Treeplex& tp, const SequenceVector& x);

struct CounterfactualLosses {
  // [l̂_j]_a, flat slot layout.
  SequenceVector action_losses;
  // l̂_j = <l̂_j, x̂_j>, one entry per decision point.
  std::vector<double> values;

  // Sum of values over the parentless decision points; equals <l, x>.
  double root_value(const Treeplex& tp) const;
};

// Single bottom-up pass: [l̂_j]_a = [l]_{ja} + Σ_{j' ∈ C_ja} l̂_{j'}.
CounterfactualLosses ComputeCounterfactualLosses(const Treeplex& tp,
                                                 const SequenceVector& loss,
                                                 const BehavioralStrategy& b);

// Same pass writing into caller-owned buffers, for solver hot loops.
void ComputeCounterfactualLossesInto(const Treeplex& tp,
                                     const SequenceVector& loss,
                                     const BehavioralStrategy& b,
                                     CounterfactualLosses& out);

// [r̂_j]_a = l̂_j - [l̂_j]_a, flat slot layout.
SequenceVector InstantaneousRegrets(const Treeplex& tp,
                                    const CounterfactualLosses& cf);

// |<l,x> - <l,x'> - Σ_j x'_{p_j} <r̂_j, x̂'_j>| with r̂ computed under (l, b).
double RegretDecompositionResidual(const Treeplex& tp,
                                   const SequenceVector& loss,
                                   const BehavioralStrategy& b,
                                   const BehavioralStrategy& b_prime);

}  // namespace cfroco

#endif  // CFROCO_TREEPLEX_H_
