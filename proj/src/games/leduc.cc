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

#include "cfroco/games.h"
#include "games/limit_betting.h"

namespace cfroco {
namespace {

using internal::LimitBetting;
using internal::RoundStatus;

constexpr int kAnte = 1;
constexpr int kMaxRaises = 2;
constexpr int kRaiseSize[2] = {2, 4};

// Cards are ids rank * suits + suit; infosets distinguish suits.
class LeducState : public GameState {
 public:
  LeducState(int ranks, int suits)
      : ranks_(ranks), suits_(suits), betting_(kAnte, kAnte) {}

  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<LeducState>(*this);
  }

  Actor CurrentActor() const override {
    if (done_) return Actor::kTerminal;
    if (dealing_) return Actor::kChance;
    return betting_.to_act() == 0 ? Actor::kPlayer1 : Actor::kPlayer2;
  }

  int NumActions() const override {
    if (dealing_) return ranks_ * suits_ - NumDealt();
    return betting_.NumLegal();
  }

  void ApplyAction(int action) override {
    if (dealing_) {
      Deal(action);
      return;
    }
    switch (betting_.Apply(action)) {
      case RoundStatus::kOpen:
        break;
      case RoundStatus::kFolded:
        done_ = true;
        break;
      case RoundStatus::kClosed:
        if (round_ == 0) {
          dealing_ = true;
        } else {
          done_ = true;
        }
        break;
    }
  }

  std::string InformationState() const override {
    const int p = betting_.to_act();
    return std::to_string(hole_[p]) + ":" + std::to_string(public_) +
           betting_.history();
  }

  double Payoff() const override {
    if (betting_.folder() >= 0) {
      return betting_.folder() == 0 ? -betting_.contrib(0)
                                    : betting_.contrib(1);
    }
    const int pub = public_ / suits_;
    const int r0 = hole_[0] / suits_;
    const int r1 = hole_[1] / suits_;
    int winner = -1;
    if (r0 == pub && r1 != pub) {
      winner = 0;
    } else if (r1 == pub && r0 != pub) {
      winner = 1;
    } else if (r0 != r1) {
      winner = r0 > r1 ? 0 : 1;
    }
    if (winner < 0) return 0.0;
    return winner == 0 ? betting_.contrib(1) : -betting_.contrib(0);
  }

 private:
  int NumDealt() const {
    return (hole_[0] >= 0) + (hole_[1] >= 0) + (public_ >= 0);
  }

  // Outcome index into the undealt cards in increasing order.
  void Deal(int outcome) {
    int card = -1;
    for (int c = 0, k = 0; c < ranks_ * suits_; ++c) {
      if (c == hole_[0] || c == hole_[1]) continue;
      if (k++ == outcome) {
        card = c;
        break;
      }
    }
    if (hole_[0] < 0) {
      hole_[0] = card;
      return;
    }
    if (hole_[1] < 0) {
      hole_[1] = card;
      round_ = 0;
    } else {
      public_ = card;
      round_ = 1;
    }
    dealing_ = false;
    betting_.NewRound(0, kRaiseSize[round_], kMaxRaises);
  }

  int ranks_;
  int suits_;
  int hole_[2] = {-1, -1};
  int public_ = -1;
  int round_ = -1;
  bool dealing_ = true;
  bool done_ = false;
  LimitBetting betting_;
};

}  // namespace

std::unique_ptr<GameState> NewLeducState(int ranks, int suits) {
  if (ranks < 2 || suits < 1 || ranks * suits < 3) {
    throw std::invalid_argument("leduc needs at least 3 cards and 2 ranks");
  }
  return std::make_unique<LeducState>(ranks, suits);
}

}  // namespace cfroco
