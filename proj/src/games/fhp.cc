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

#include <algorithm>
#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfroco/games.h"
#include "games/limit_betting.h"

namespace cfroco {
namespace {

using internal::LimitBetting;
using internal::RoundStatus;

constexpr int kSmallBlind = 50;
constexpr int kBigBlind = 100;
constexpr int kRaiseSize = 100;
constexpr int kMaxRaises = 3;
constexpr int kBoardCards = 3;

enum Category {
  kHighCard,
  kOnePair,
  kTwoPair,
  kTrips,
  kStraight,
  kFlush,
  kFullHouse,
  kQuads,
  kStraightFlush,
};

// Standard five-card ranking as a comparable vector: category first, then
// ranks grouped by multiplicity.
std::vector<int> EvaluateHand(const std::array<int, 5>& cards, int suits) {
  std::vector<std::pair<int, int>> groups;  // (count, rank)
  std::array<int, 5> ranks;
  bool flush = true;
  for (int i = 0; i < 5; ++i) {
    ranks[i] = cards[i] / suits;
    if (cards[i] % suits != cards[0] % suits) flush = false;
  }
  std::sort(ranks.begin(), ranks.end(), std::greater<int>());
  for (int r : ranks) {
    if (!groups.empty() && groups.back().second == r) {
      ++groups.back().first;
    } else {
      groups.push_back({1, r});
    }
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  const bool straight = groups.size() == 5 && ranks[0] - ranks[4] == 4;
  Category cat = kHighCard;
  if (straight && flush) {
    cat = kStraightFlush;
  } else if (groups[0].first == 4) {
    cat = kQuads;
  } else if (groups[0].first == 3 && groups[1].first == 2) {
    cat = kFullHouse;
  } else if (flush) {
    cat = kFlush;
  } else if (straight) {
    cat = kStraight;
  } else if (groups[0].first == 3) {
    cat = kTrips;
  } else if (groups[0].first == 2 && groups[1].first == 2) {
    cat = kTwoPair;
  } else if (groups[0].first == 2) {
    cat = kOnePair;
  }
  std::vector<int> key{cat};
  for (const auto& g : groups) key.push_back(g.second);
  return key;
}

class FhpState : public GameState {
 public:
  FhpState(int suits, int ranks)
      : suits_(suits), ranks_(ranks), betting_(kSmallBlind, kBigBlind) {}

  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<FhpState>(*this);
  }

  Actor CurrentActor() const override {
    if (done_) return Actor::kTerminal;
    if (dealing_) return Actor::kChance;
    return betting_.to_act() == 0 ? Actor::kPlayer1 : Actor::kPlayer2;
  }

  int NumActions() const override {
    if (!dealing_) return betting_.NumLegal();
    const int left = suits_ * ranks_ - static_cast<int>(dealt_.size());
    return dealt_.size() < 4 ? Choose(left, 2) : Choose(left, kBoardCards);
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
        if (dealt_.size() == 4) {
          dealing_ = true;
        } else {
          done_ = true;
        }
        break;
    }
  }

  std::string InformationState() const override {
    const int p = betting_.to_act();
    std::string s = std::to_string(dealt_[2 * p]) + "," +
                    std::to_string(dealt_[2 * p + 1]) + ":";
    for (std::size_t i = 4; i < dealt_.size(); ++i) {
      s += std::to_string(dealt_[i]) + ",";
    }
    return s + betting_.history();
  }

  double Payoff() const override {
    if (betting_.folder() >= 0) {
      return betting_.folder() == 0 ? -betting_.contrib(0)
                                    : betting_.contrib(1);
    }
    std::array<int, 5> h0{dealt_[0], dealt_[1], dealt_[4], dealt_[5],
                          dealt_[6]};
    std::array<int, 5> h1{dealt_[2], dealt_[3], dealt_[4], dealt_[5],
                          dealt_[6]};
    const auto v0 = EvaluateHand(h0, suits_);
    const auto v1 = EvaluateHand(h1, suits_);
    if (v0 == v1) return 0.0;
    return v0 > v1 ? betting_.contrib(1) : -betting_.contrib(0);
  }

 private:
  static int Choose(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
  }

  // Outcome index into the lexicographic list of k-subsets of undealt cards.
  void Deal(int outcome) {
    std::vector<int> left;
    for (int c = 0; c < suits_ * ranks_; ++c) {
      if (std::find(dealt_.begin(), dealt_.end(), c) == dealt_.end()) {
        left.push_back(c);
      }
    }
    const int k = dealt_.size() < 4 ? 2 : kBoardCards;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (int n = 0; n < outcome; ++n) {
      int i = k - 1;
      while (idx[i] == static_cast<int>(left.size()) - k + i) --i;
      ++idx[i];
      for (int m = i + 1; m < k; ++m) idx[m] = idx[m - 1] + 1;
    }
    for (int i : idx) dealt_.push_back(left[i]);
    if (dealt_.size() == 2) return;
    dealing_ = false;
    if (dealt_.size() == 4) {
      betting_.NewRound(0, kRaiseSize, kMaxRaises);
    } else {
      betting_.NewRound(1, kRaiseSize, kMaxRaises);
    }
  }

  int suits_;
  int ranks_;
  // Hole cards of player 1, of player 2, then the board.
  std::vector<int> dealt_;
  bool dealing_ = true;
  bool done_ = false;
  LimitBetting betting_;
};

}  // namespace

std::unique_ptr<GameState> NewFhpState(int suits, int ranks) {
  if (suits < 1 || ranks < 2 || suits * ranks < 7) {
    throw std::invalid_argument("fhp needs at least 7 cards");
  }
  return std::make_unique<FhpState>(suits, ranks);
}

}  // namespace cfroco
