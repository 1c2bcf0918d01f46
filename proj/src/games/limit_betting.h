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

// Limit betting round shared by the poker games.

#ifndef CFROCO_SRC_GAMES_LIMIT_BETTING_H_
#define CFROCO_SRC_GAMES_LIMIT_BETTING_H_

#include <string>
#include <vector>

namespace cfroco::internal {

enum class BetAction : char { kFold = 'f', kCall = 'c', kRaise = 'r' };

enum class RoundStatus { kOpen, kFolded, kClosed };

// Fold is legal only when facing a bet. A call closes the round unless it is
// the first action of the round; so does a fold.
class LimitBetting {
 public:
  LimitBetting(int contrib1, int contrib2) : contrib_{contrib1, contrib2} {}

  // Starts a new round with player `first` to act.
  void NewRound(int first, int raise_size, int max_raises) {
    to_act_ = first;
    raise_size_ = raise_size;
    max_raises_ = max_raises;
    raises_ = 0;
    actions_ = 0;
    history_.push_back('/');
  }

  int to_act() const { return to_act_; }
  int contrib(int p) const { return contrib_[p]; }
  const std::string& history() const { return history_; }

  std::vector<BetAction> Legal() const {
    std::vector<BetAction> out;
    if (contrib_[to_act_] < contrib_[1 - to_act_]) {
      out.push_back(BetAction::kFold);
    }
    out.push_back(BetAction::kCall);
    if (raises_ < max_raises_) out.push_back(BetAction::kRaise);
    return out;
  }

  int NumLegal() const {
    return (contrib_[to_act_] < contrib_[1 - to_act_] ? 1 : 0) + 1 +
           (raises_ < max_raises_ ? 1 : 0);
  }

  // Applies the index-th legal action. Sets folder() on a fold.
  RoundStatus Apply(int index) {
    const BetAction a = Legal()[index];
    history_.push_back(static_cast<char>(a));
    ++actions_;
    const int me = to_act_;
    switch (a) {
      case BetAction::kFold:
        folder_ = me;
        return RoundStatus::kFolded;
      case BetAction::kCall:
        contrib_[me] = contrib_[1 - me];
        if (actions_ >= 2) return RoundStatus::kClosed;
        break;
      case BetAction::kRaise:
        contrib_[me] = contrib_[1 - me] + raise_size_;
        ++raises_;
        break;
    }
    to_act_ = 1 - me;
    return RoundStatus::kOpen;
  }

  int folder() const { return folder_; }

 private:
  int contrib_[2];
  int to_act_ = 0;
  int raise_size_ = 0;
  int max_raises_ = 0;
  int raises_ = 0;
  int actions_ = 0;
  int folder_ = -1;
  std::string history_;
};

}  // namespace cfroco::internal

#endif  // CFROCO_SRC_GAMES_LIMIT_BETTING_H_
