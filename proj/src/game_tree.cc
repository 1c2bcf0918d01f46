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

#include "cfroco/game_tree.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cfroco/treeplex.h"

namespace cfroco {

double GameState::ChanceProbability(int /*outcome*/) const {
  return 1.0 / NumActions();
}

namespace {

class TreeExpander {
 public:
  TreeExpander(std::vector<Actor>& actor, std::vector<int>& first_child,
               std::vector<std::uint16_t>& num_children,
               std::vector<int>& info, std::vector<double>& chance_probs,
               std::vector<double>& payoffs,
               std::vector<InfosetInfo>* infosets)
      : actor_(actor),
        first_child_(first_child),
        num_children_(num_children),
        info_(info),
        chance_probs_(chance_probs),
        payoffs_(payoffs),
        infosets_(infosets) {}

  void AddRoot() { AddNode(); }

  void Expand(int h, const GameState& s) {
    const Actor who = s.CurrentActor();
    actor_[h] = who;
    if (who == Actor::kTerminal) {
      info_[h] = static_cast<int>(payoffs_.size());
      payoffs_.push_back(s.Payoff());
      return;
    }
    const int k = s.NumActions();
    if (k < 1 || k > std::numeric_limits<std::uint16_t>::max()) {
      throw std::invalid_argument("bad number of actions at a history");
    }
    if (who == Actor::kChance) {
      info_[h] = static_cast<int>(chance_probs_.size());
      double sum = 0.0;
      for (int a = 0; a < k; ++a) {
        const double p = s.ChanceProbability(a);
        if (!(p > 0.0)) {
          throw std::invalid_argument("chance outcome without probability");
        }
        chance_probs_.push_back(p);
        sum += p;
      }
      if (std::abs(sum - 1.0) > kStructuralTolerance) {
        throw std::invalid_argument("chance probabilities do not sum to 1");
      }
    } else {
      const int p = static_cast<int>(who);
      auto [it, inserted] = keys_[p].try_emplace(
          s.InformationState(), static_cast<int>(infosets_[p].size()));
      if (inserted) infosets_[p].push_back(InfosetInfo{k, 0});
      InfosetInfo& info = infosets_[p][it->second];
      if (info.num_actions != k) {
        throw std::invalid_argument("infoset histories disagree on actions");
      }
      ++info.num_histories;
      info_[h] = it->second;
    }
    const int first = static_cast<int>(actor_.size());
    first_child_[h] = first;
    num_children_[h] = static_cast<std::uint16_t>(k);
    for (int a = 0; a < k; ++a) AddNode();
    for (int a = 0; a < k; ++a) {
      std::unique_ptr<GameState> next = s.Clone();
      next->ApplyAction(a);
      Expand(first + a, *next);
    }
  }

 private:
  void AddNode() {
    actor_.push_back(Actor::kTerminal);
    first_child_.push_back(-1);
    num_children_.push_back(0);
    info_.push_back(-1);
  }

  std::vector<Actor>& actor_;
  std::vector<int>& first_child_;
  std::vector<std::uint16_t>& num_children_;
  std::vector<int>& info_;
  std::vector<double>& chance_probs_;
  std::vector<double>& payoffs_;
  std::vector<InfosetInfo>* infosets_;
  std::unordered_map<std::string, int> keys_[2];
};

struct Factors {
  std::int64_t action;
  std::int64_t stochastic;
  int depth;
};

Factors StatsRecursive(const GameTree& tree, int h) {
  const Actor who = tree.actor(h);
  if (who == Actor::kTerminal) return {1, 1, 0};
  const bool player = IsPlayer(who);
  Factors out{0, 0, 0};
  for (int a = 0; a < tree.num_children(h); ++a) {
    const Factors c = StatsRecursive(tree, tree.child(h, a));
    if (player) {
      out.action += c.action;
      out.stochastic = std::max(out.stochastic, c.stochastic);
    } else {
      out.action = std::max(out.action, c.action);
      out.stochastic += c.stochastic;
    }
    out.depth = std::max(out.depth, c.depth);
  }
  if (player) ++out.depth;
  return out;
}

}  // namespace

GameTree BuildGameTree(const GameState& root, std::string name) {
  GameTree tree;
  tree.name_ = std::move(name);
  TreeExpander expander(tree.actor_, tree.first_child_, tree.num_children_,
                        tree.info_, tree.chance_probs_, tree.payoffs_,
                        tree.infosets_);
  expander.AddRoot();
  expander.Expand(0, root);
  tree.actor_.shrink_to_fit();
  tree.first_child_.shrink_to_fit();
  tree.num_children_.shrink_to_fit();
  tree.info_.shrink_to_fit();
  tree.payoffs_.shrink_to_fit();
  return tree;
}

GameStats ComputeGameStats(const GameTree& tree) {
  GameStats stats;
  for (int h = 0; h < tree.num_nodes(); ++h) {
    if (IsPlayer(tree.actor(h))) ++stats.num_histories;
  }
  stats.num_leaves = tree.num_leaves();
  for (int p = 0; p < 2; ++p) {
    stats.num_decision_points += tree.num_infosets(p);
    for (int i = 0; i < tree.num_infosets(p); ++i) {
      stats.max_decision_size = std::max(
          stats.max_decision_size, tree.infoset_info(p, i).num_histories);
    }
  }
  const Factors f = StatsRecursive(tree, 0);
  stats.action_factor = f.action;
  stats.stochastic_factor = f.stochastic;
  stats.depth = f.depth;
  return stats;
}

}  // namespace cfroco
