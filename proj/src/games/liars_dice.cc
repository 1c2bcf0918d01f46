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

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfroco/games.h"

namespace cfroco {
namespace {

constexpr int kDice = 2;

// Bid b means "at least b / sides + 1 dice show face b % sides + 1". Legal
// actions are the bids above the last one in increasing order, followed by
// the liar call once a bid exists.
class LiarsDiceState : public GameState {
 public:
  explicit LiarsDiceState(int sides) : sides_(sides) {}

  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<LiarsDiceState>(*this);
  }

  Actor CurrentActor() const override {
    if (rolled_ < kDice) return Actor::kChance;
    if (called_) return Actor::kTerminal;
    return bids_.size() % 2 == 0 ? Actor::kPlayer1 : Actor::kPlayer2;
  }

  int NumActions() const override {
    if (rolled_ < kDice) return sides_;
    const int next = bids_.empty() ? 0 : bids_.back() + 1;
    return kDice * sides_ - next + (bids_.empty() ? 0 : 1);
  }

  void ApplyAction(int action) override {
    if (rolled_ < kDice) {
      die_[rolled_++] = action;
      return;
    }
    const int next = bids_.empty() ? 0 : bids_.back() + 1;
    if (next + action < kDice * sides_) {
      bids_.push_back(next + action);
    } else {
      called_ = true;
    }
  }

  std::string InformationState() const override {
    const int p = bids_.size() % 2;
    std::string s = std::to_string(die_[p]) + ":";
    for (int b : bids_) s += std::to_string(b) + ",";
    return s;
  }

  double Payoff() const override {
    const int caller = bids_.size() % 2;
    const int quantity = bids_.back() / sides_ + 1;
    const int face = bids_.back() % sides_;
    const int count = (die_[0] == face) + (die_[1] == face);
    const bool caller_wins = count < quantity;
    return (caller_wins == (caller == 0)) ? 1.0 : -1.0;
  }

 private:
  int sides_;
  int rolled_ = 0;
  int die_[kDice] = {0, 0};
  std::vector<int> bids_;
  bool called_ = false;
};

}  // namespace

std::unique_ptr<GameState> NewLiarsDiceState(int sides) {
  if (sides < 2) throw std::invalid_argument("liar's dice needs 2+ sides");
  return std::make_unique<LiarsDiceState>(sides);
}

}  // namespace cfroco
