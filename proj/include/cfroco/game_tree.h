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

#ifndef CFROCO_GAME_TREE_H_
#define CFROCO_GAME_TREE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cfroco {

inline constexpr int kPlayer1 = 0;
inline constexpr int kPlayer2 = 1;

enum class Actor : std::uint8_t {
  kPlayer1 = 0,
  kPlayer2 = 1,
  kChance = 2,
  kTerminal = 3,
};

inline bool IsPlayer(Actor a) {
  return a == Actor::kPlayer1 || a == Actor::kPlayer2;
}

// Rules of a game, expanded once into a GameTree. Actions are indexed
// 0..NumActions()-1 and must mean the same thing at every history of an
// information set.
class GameState {
 public:
  virtual ~GameState() = default;

  virtual std::unique_ptr<GameState> Clone() const = 0;
  virtual Actor CurrentActor() const = 0;
  // Legal actions at player nodes, outcomes at chance nodes.
  virtual int NumActions() const = 0;
  // Defaults to uniform.
  virtual double ChanceProbability(int outcome) const;
  virtual void ApplyAction(int action) = 0;
  // Observation history of the acting player; equal strings share an
  // information set.
  virtual std::string InformationState() const = 0;
  // Utility to player 1 at terminals. Player 2 receives the negation.
  virtual double Payoff() const = 0;
};

struct InfosetInfo {
  int num_actions = 0;
  int num_histories = 0;
};

// Fully expanded history tree.
//
// Nodes are stored in preorder with the children of each node contiguous, so
// every child has a larger index than its parent. Node 0 is the root.
class GameTree {
 public:
  int num_nodes() const { return static_cast<int>(actor_.size()); }
  Actor actor(int h) const { return actor_[h]; }
  int num_children(int h) const { return num_children_[h]; }
  int child(int h, int a) const { return first_child_[h] + a; }
  // Probability of outcome a at chance node h.
  double chance_probability(int h, int a) const {
    return chance_probs_[info_[h] + a];
  }
  // Infoset index of a player node within its owner's infoset list.
  int infoset(int h) const { return info_[h]; }
  // Utility to player 1 at terminal h.
  double payoff(int h) const { return payoffs_[info_[h]]; }

  int num_infosets(int player) const {
    return static_cast<int>(infosets_[player].size());
  }
  const InfosetInfo& infoset_info(int player, int i) const {
    return infosets_[player][i];
  }
  int num_leaves() const { return static_cast<int>(payoffs_.size()); }
  const std::string& name() const { return name_; }

 private:
  friend GameTree BuildGameTree(const GameState& root, std::string name);

  std::vector<Actor> actor_;
  std::vector<int> first_child_;
  std::vector<std::uint16_t> num_children_;
  // Player nodes: infoset id. Chance nodes: offset into chance_probs_.
  // Terminals: offset into payoffs_.
  std::vector<int> info_;
  std::vector<double> chance_probs_;
  std::vector<double> payoffs_;
  std::vector<InfosetInfo> infosets_[2];
  std::string name_;
};

// Expands every history reachable from `root`. Throws std::invalid_argument
// if chance probabilities do not sum to 1 within 1e-12 or if two histories of
// one infoset disagree on the actor or the number of actions.
GameTree BuildGameTree(const GameState& root, std::string name);

struct GameStats {
  // Infosets of both players; dummy roots are not counted.
  std::int64_t num_decision_points = 0;
  // Histories where a player acts.
  std::int64_t num_histories = 0;
  std::int64_t num_leaves = 0;
  // Largest number of player moves on a root-to-leaf path.
  int depth = 0;
  // Largest number of histories in one infoset.
  int max_decision_size = 0;
  // Leaf-count contributions of the players and of chance: sums over
  // children at the respective nodes, maxima elsewhere.
  std::int64_t action_factor = 0;
  std::int64_t stochastic_factor = 0;
};

GameStats ComputeGameStats(const GameTree& tree);

}  // namespace cfroco

#endif  // CFROCO_GAME_TREE_H_
