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

// Sequence-form view of a GameTree: one treeplex per player and the bilinear
// loss x^T A y with chance folded into A.
//
// Sign convention: player 1 minimizes x^T A y with A = -U, so a leaf worth u
// chips to player 1 contributes -u to player 1's loss. Player 2's loss vector
// is -A^T x, so the two losses of any profile sum to zero.

#ifndef CFROCO_SEQUENCE_FORM_H_
#define CFROCO_SEQUENCE_FORM_H_

#include <optional>
#include <string>
#include <vector>

#include "cfroco/game_tree.h"
#include "cfroco/treeplex.h"

namespace cfroco {

struct PlayerTreeplex {
  Treeplex treeplex;
  // Decision point id of each infoset of the player.
  std::vector<int> infoset_to_point;
  // Inverse map; -1 for the dummy root.
  std::vector<int> point_to_infoset;
  // One-action root added when the player has several parentless infosets
  // or reaches a leaf without having acted.
  std::optional<int> dummy_root;

  int num_real_decision_points() const {
    return static_cast<int>(infoset_to_point.size());
  }
};

// One decision point per infoset of `player`. Throws std::invalid_argument
// when histories of one infoset follow different own sequences (perfect
// recall violated).
PlayerTreeplex BuildTreeplex(const GameTree& tree, int player);

struct LossContext {
  // Largest |u(z)| over leaves.
  double loss_bound = 0.0;
  // Per decision point: chance reach times uniform-opponent reach, summed
  // over the histories of the infoset. 1 for the dummy root.
  std::vector<double> opponent_reach;
  // Per decision point: number of actions.
  std::vector<int> num_actions;
};

class SequenceFormGame {
 public:
  // Compiles a tree. The tree is not referenced afterwards.
  explicit SequenceFormGame(const GameTree& tree);

  const std::string& name() const { return name_; }
  const PlayerTreeplex& player(int p) const { return players_[p]; }
  const Treeplex& treeplex(int p) const { return players_[p].treeplex; }
  const LossContext& loss_context(int p) const { return contexts_[p]; }
  double loss_bound() const { return contexts_[0].loss_bound; }
  int num_payoff_entries() const { return static_cast<int>(entries_.size()); }

  // l = A y for player 1, l = -A^T x for player 2. `opponent` must be a
  // sequence-form vector on the other player's treeplex.
  SequenceVector LossVector(int player, const SequenceVector& opponent) const;
  void LossVectorInto(int player, const SequenceVector& opponent,
                      SequenceVector& out) const;

  // x^T A y: player 1's expected loss, i.e. minus the expected payoff.
  double Player1Loss(const SequenceVector& x, const SequenceVector& y) const;

 private:
  struct PayoffEntry {
    int slot1;
    int slot2;
    // Sum of chance reach times u over leaves with these two sequences.
    double coef;
  };

  std::string name_;
  PlayerTreeplex players_[2];
  LossContext contexts_[2];
  std::vector<PayoffEntry> entries_;
  // Compensated summation for games above 10^6 leaves.
  bool compensated_ = false;
};

}  // namespace cfroco

#endif  // CFROCO_SEQUENCE_FORM_H_
