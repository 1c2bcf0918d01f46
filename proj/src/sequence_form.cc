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

#include "cfroco/sequence_form.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cfroco {

namespace {

// Games with more leaves than this use compensated summation.
constexpr std::size_t kKahanThreshold = 1000000;

struct RecallScan {
  const GameTree& tree;
  int player;
  std::vector<std::optional<Sequence>> parent;
  std::vector<bool> seen;
  bool leaf_without_action = false;

  void Visit(int h, std::optional<Sequence> own) {
    const Actor who = tree.actor(h);
    if (who == Actor::kTerminal) {
      if (!own) leaf_without_action = true;
      return;
    }
    if (static_cast<int>(who) == player) {
      const int i = tree.infoset(h);
      if (!seen[i]) {
        seen[i] = true;
        parent[i] = own;
      } else if (parent[i] != own) {
        throw std::invalid_argument("perfect recall violated at infoset " +
                                    std::to_string(i) + " of player " +
                                    std::to_string(player + 1));
      }
      for (int a = 0; a < tree.num_children(h); ++a) {
        Visit(tree.child(h, a), Sequence{i, a});
      }
      return;
    }
    for (int a = 0; a < tree.num_children(h); ++a) Visit(tree.child(h, a), own);
  }
};

}  // namespace

PlayerTreeplex BuildTreeplex(const GameTree& tree, int player) {
  const int n = tree.num_infosets(player);
  if (n == 0) throw std::invalid_argument("player never acts");
  RecallScan scan{tree, player, std::vector<std::optional<Sequence>>(n),
                  std::vector<bool>(n, false)};
  scan.Visit(0, std::nullopt);

  int parentless = 0;
  for (const auto& p : scan.parent) parentless += p ? 0 : 1;
  const bool dummy = parentless != 1 || scan.leaf_without_action;

  std::vector<DecisionPointSpec> specs(n);
  for (int i = 0; i < n; ++i) {
    specs[i].num_actions = tree.infoset_info(player, i).num_actions;
    specs[i].parent = scan.parent[i];
    if (dummy && !specs[i].parent) specs[i].parent = Sequence{n, 0};
  }
  if (dummy) specs.push_back(DecisionPointSpec{1, std::nullopt});

  PlayerTreeplex out{Treeplex(specs), std::vector<int>(n), {}, std::nullopt};
  out.point_to_infoset.assign(out.treeplex.num_decision_points(), -1);
  for (int i = 0; i < n; ++i) {
    out.infoset_to_point[i] = out.treeplex.id_of_input(i);
    out.point_to_infoset[out.infoset_to_point[i]] = i;
  }
  if (dummy) out.dummy_root = out.treeplex.id_of_input(n);
  return out;
}

namespace {

struct Compiler {
  const GameTree& tree;
  const PlayerTreeplex* players;
  LossContext* contexts;
  std::vector<std::pair<std::pair<int, int>, double>> raw;

  // reach[p]: chance reach times uniform reach of p's opponent.
  void Visit(int h, int slot1, int slot2, double chance, double reach1,
             double reach2) {
    const Actor who = tree.actor(h);
    if (who == Actor::kTerminal) {
      if (slot1 < 0 || slot2 < 0) {
        throw std::logic_error("leaf without a sequence slot");
      }
      const double u = tree.payoff(h);
      contexts[0].loss_bound = std::max(contexts[0].loss_bound, std::abs(u));
      raw.push_back({{slot1, slot2}, chance * u});
      return;
    }
    const int k = tree.num_children(h);
    if (who == Actor::kChance) {
      for (int a = 0; a < k; ++a) {
        const double p = tree.chance_probability(h, a);
        Visit(tree.child(h, a), slot1, slot2, chance * p, reach1 * p,
              reach2 * p);
      }
      return;
    }
    const int p = static_cast<int>(who);
    const int j = players[p].infoset_to_point[tree.infoset(h)];
    const DecisionPointMeta& meta = players[p].treeplex.point(j);
    contexts[p].opponent_reach[j] += p == kPlayer1 ? reach1 : reach2;
    for (int a = 0; a < k; ++a) {
      if (p == kPlayer1) {
        Visit(tree.child(h, a), meta.slot(a), slot2, chance, reach1,
              reach2 / k);
      } else {
        Visit(tree.child(h, a), slot1, meta.slot(a), chance, reach1 / k,
              reach2);
      }
    }
  }
};

int EmptySequenceSlot(const PlayerTreeplex& pt) {
  return pt.dummy_root ? pt.treeplex.point(*pt.dummy_root).slot(0) : -1;
}

}  // namespace

SequenceFormGame::SequenceFormGame(const GameTree& tree)
    : name_(tree.name()),
      players_{BuildTreeplex(tree, kPlayer1), BuildTreeplex(tree, kPlayer2)},
      compensated_(static_cast<std::size_t>(tree.num_leaves()) >
                   kKahanThreshold) {
  for (int p = 0; p < 2; ++p) {
    const Treeplex& tp = players_[p].treeplex;
    contexts_[p].opponent_reach.assign(tp.num_decision_points(), 0.0);
    contexts_[p].num_actions.resize(tp.num_decision_points());
    for (const auto& j : tp.decision_points()) {
      contexts_[p].num_actions[j.id] = j.num_actions;
    }
  }
  Compiler compiler{tree, players_, contexts_, {}};
  compiler.raw.reserve(tree.num_leaves());
  compiler.Visit(0, EmptySequenceSlot(players_[0]),
                 EmptySequenceSlot(players_[1]), 1.0, 1.0, 1.0);
  contexts_[1].loss_bound = contexts_[0].loss_bound;
  for (int p = 0; p < 2; ++p) {
    if (players_[p].dummy_root) {
      contexts_[p].opponent_reach[*players_[p].dummy_root] = 1.0;
    }
  }

  auto& raw = compiler.raw;
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t k = i;
    double coef = 0.0;
    while (k < raw.size() && raw[k].first == raw[i].first) coef += raw[k++].second;
    if (coef != 0.0) {
      entries_.push_back({raw[i].first.first, raw[i].first.second, coef});
    }
    i = k;
  }
  raw.clear();
  raw.shrink_to_fit();
  entries_.shrink_to_fit();
}

SequenceVector SequenceFormGame::LossVector(
    int player, const SequenceVector& opponent) const {
  SequenceVector out;
  LossVectorInto(player, opponent, out);
  return out;
}

void SequenceFormGame::LossVectorInto(int player,
                                      const SequenceVector& opponent,
                                      SequenceVector& out) const {
  if (player != kPlayer1 && player != kPlayer2) {
    throw std::invalid_argument("player must be 0 or 1");
  }
  const int other = 1 - player;
  if (static_cast<int>(opponent.size()) != treeplex(other).num_sequences()) {
    throw std::invalid_argument("opponent vector does not fit the treeplex");
  }
  const int n = treeplex(player).num_sequences();
  out.values().assign(n, 0.0);
  std::vector<double> carry(compensated_ ? n : 0, 0.0);
  for (const PayoffEntry& e : entries_) {
    int slot;
    double term;
    if (player == kPlayer1) {
      slot = e.slot1;
      term = -e.coef * opponent[e.slot2];
    } else {
      slot = e.slot2;
      term = e.coef * opponent[e.slot1];
    }
    if (!compensated_) {
      out[slot] += term;
      continue;
    }
    const double y = term - carry[slot];
    const double t = out[slot] + y;
    carry[slot] = (t - out[slot]) - y;
    out[slot] = t;
  }
}

double SequenceFormGame::Player1Loss(const SequenceVector& x,
                                     const SequenceVector& y) const {
  if (static_cast<int>(x.size()) != treeplex(kPlayer1).num_sequences() ||
      static_cast<int>(y.size()) != treeplex(kPlayer2).num_sequences()) {
    throw std::invalid_argument("profile does not fit the treeplexes");
  }
  double sum = 0.0;
  double carry = 0.0;
  for (const PayoffEntry& e : entries_) {
    const double term = -e.coef * x[e.slot1] * y[e.slot2] - carry;
    const double t = sum + term;
    carry = (t - sum) - term;
    sum = t;
  }
  return sum;
}

}  // namespace cfroco
