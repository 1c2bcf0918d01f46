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

// Actions: 0 rock, 1 paper, 2 scissors.
class RpsState : public GameState {
 public:
  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<RpsState>(*this);
  }
  Actor CurrentActor() const override {
    if (moves_ == 0) return Actor::kPlayer1;
    if (moves_ == 1) return Actor::kPlayer2;
    return Actor::kTerminal;
  }
  int NumActions() const override { return 3; }
  void ApplyAction(int action) override { choice_[moves_++] = action; }
  std::string InformationState() const override { return ""; }
  double Payoff() const override {
    const int d = (choice_[0] - choice_[1] + 3) % 3;
    if (d == 0) return 0.0;
    return d == 1 ? 1.0 : -1.0;
  }

 private:
  int moves_ = 0;
  int choice_[2] = {0, 0};
};

}  // namespace

std::unique_ptr<GameState> NewRpsState() {
  return std::make_unique<RpsState>();
}

}  // namespace cfroco
