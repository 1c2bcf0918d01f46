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

// Cards and prizes are 0..n-1 and worth their index plus one. Each round
// chance reveals a prize, player 1 bids, then player 2 bids without seeing
// that bid. With one card left everything is forced, so the game ends after
// n - 1 chosen rounds.
class GoofspielState : public GameState {
 public:
  GoofspielState(int n, bool imperfect) : n_(n), imperfect_(imperfect) {}

  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<GoofspielState>(*this);
  }

  Actor CurrentActor() const override {
    const int r = static_cast<int>(bids_[1].size());
    if (r == n_ - 1) return Actor::kTerminal;
    if (static_cast<int>(prizes_.size()) == r) return Actor::kChance;
    return bids_[0].size() == bids_[1].size() ? Actor::kPlayer1
                                              : Actor::kPlayer2;
  }

  int NumActions() const override {
    return n_ - static_cast<int>(bids_[1].size());
  }

  void ApplyAction(int action) override {
    const Actor who = CurrentActor();
    if (who == Actor::kChance) {
      prizes_.push_back(NthUnused(prizes_, action));
    } else {
      auto& mine = bids_[static_cast<int>(who)];
      mine.push_back(NthUnused(mine, action));
    }
  }

  std::string InformationState() const override {
    const int p = static_cast<int>(CurrentActor());
    const std::size_t done = bids_[1].size();
    std::string s;
    for (int c : prizes_) s.push_back(static_cast<char>('a' + c));
    s.push_back('|');
    for (std::size_t i = 0; i < done; ++i) {
      s.push_back(static_cast<char>('a' + bids_[p][i]));
      if (imperfect_) {
        const int d = bids_[0][i] - bids_[1][i];
        s.push_back(d > 0 ? '>' : (d < 0 ? '<' : '='));
      } else {
        s.push_back(static_cast<char>('a' + bids_[1 - p][i]));
      }
    }
    return s;
  }

  double Payoff() const override {
    // Last round uses the remaining prize and cards.
    std::vector<int> prizes = prizes_;
    std::vector<int> b0 = bids_[0];
    std::vector<int> b1 = bids_[1];
    prizes.push_back(NthUnused(prizes, 0));
    b0.push_back(NthUnused(b0, 0));
    b1.push_back(NthUnused(b1, 0));
    // Twice the score difference, so split prizes stay integral.
    int diff = 0;
    for (int i = 0; i < n_; ++i) {
      const int value = 2 * (prizes[i] + 1);
      if (b0[i] > b1[i]) diff += value;
      if (b0[i] < b1[i]) diff -= value;
    }
    if (diff == 0) return 0.0;
    return diff > 0 ? 1.0 : -1.0;
  }

 private:
  int NthUnused(const std::vector<int>& used, int k) const {
    for (int c = 0; c < n_; ++c) {
      bool taken = false;
      for (int u : used) taken |= u == c;
      if (!taken && k-- == 0) return c;
    }
    throw std::logic_error("goofspiel action out of range");
  }

  int n_;
  bool imperfect_;
  std::vector<int> prizes_;
  std::vector<int> bids_[2];
};

}  // namespace

std::unique_ptr<GameState> NewGoofspielState(int n, bool imperfect) {
  if (n < 2 || n > 20) throw std::invalid_argument("goofspiel needs 2..20 cards");
  return std::make_unique<GoofspielState>(n, imperfect);
}

}  // namespace cfroco
