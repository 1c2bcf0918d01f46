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
#include <string>

#include "cfroco/games.h"

namespace cfroco {
namespace {

constexpr int kCards = 3;

// Actions: 0 pass, 1 bet.
class KuhnState : public GameState {
 public:
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<KuhnState>(*this);
  }

  Actor CurrentActor() const override {
    if (dealt_ < 2) return Actor::kChance;
    if (IsTerminal()) return Actor::kTerminal;
    return history_.size() % 2 == 0 ? Actor::kPlayer1 : Actor::kPlayer2;
  }

  int NumActions() const override { return dealt_ < 2 ? kCards - dealt_ : 2; }

  void ApplyAction(int action) override {
    if (dealt_ == 0) {
      card_[0] = action;
    } else if (dealt_ == 1) {
      // The remaining cards in increasing order.
      card_[1] = action < card_[0] ? action : action + 1;
    } else {
      history_.push_back(action == 0 ? 'p' : 'b');
      return;
    }
    ++dealt_;
  }

  std::string InformationState() const override {
    const int p = history_.size() % 2;
    return std::to_string(card_[p]) + history_;
  }

  double Payoff() const override {
    const double sign = card_[0] > card_[1] ? 1.0 : -1.0;
    if (history_ == "pp") return sign;
    if (history_ == "bp") return 1.0;
    if (history_ == "pbp") return -1.0;
    return 2.0 * sign;  // "bb" or "pbb"
  }

 private:
  bool IsTerminal() const {
    return history_ == "pp" || history_ == "bp" || history_ == "bb" ||
           history_ == "pbp" || history_ == "pbb";
  }

  int dealt_ = 0;
  int card_[2] = {-1, -1};
  std::string history_;
};

}  // namespace

std::unique_ptr<GameState> NewKuhnState() {
  return std::make_unique<KuhnState>();
}

}  // namespace cfroco
