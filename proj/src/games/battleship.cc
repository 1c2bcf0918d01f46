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

constexpr int kShipsPerPlayer = 2;
constexpr int kShipLength = 2;
constexpr double kShipValue = 4.0;

struct Ship {
  int cells[kShipLength];
};

// Placements alternate (player 1 ship 1, player 2 ship 1, ...), then shots
// alternate starting with player 1. Cells are row * width + column.
class BattleshipState : public GameState {
 public:
  BattleshipState(int width, int height, int shots)
      : width_(width), height_(height), shots_(shots) {
    for (int r = 0; r < height_; ++r) {
      for (int c = 0; c < width_; ++c) {
        if (c + 1 < width_) all_placements_.push_back({{Cell(r, c), Cell(r, c + 1)}});
        if (r + 1 < height_) all_placements_.push_back({{Cell(r, c), Cell(r + 1, c)}});
      }
    }
  }

  std::unique_ptr<GameState> Clone() const override {
    return std::make_unique<BattleshipState>(*this);
  }

  Actor CurrentActor() const override {
    if (over_) return Actor::kTerminal;
    const int placed = static_cast<int>(ships_[0].size() + ships_[1].size());
    const int turn = placed < 2 * kShipsPerPlayer
                         ? placed % 2
                         : static_cast<int>(shots_taken_.size()) % 2;
    return turn == 0 ? Actor::kPlayer1 : Actor::kPlayer2;
  }

  int NumActions() const override {
    const int p = static_cast<int>(CurrentActor());
    if (Placing()) return static_cast<int>(LegalPlacements(p).size());
    int n = 0;
    for (int cell = 0; cell < width_ * height_; ++cell) n += !ShotBy(p, cell);
    return n;
  }

  void ApplyAction(int action) override {
    const int p = static_cast<int>(CurrentActor());
    if (Placing()) {
      ships_[p].push_back(all_placements_[LegalPlacements(p)[action]]);
      return;
    }
    int cell = 0;
    for (int k = action;; ++cell) {
      if (!ShotBy(p, cell) && k-- == 0) break;
    }
    const bool hit = Occupies(1 - p, cell);
    shots_taken_.push_back({p, cell, hit, 0});
    shots_taken_.back().sunk = SunkBy(p);
    const int fired1 = (static_cast<int>(shots_taken_.size()) + 1) / 2;
    const int fired2 = static_cast<int>(shots_taken_.size()) / 2;
    if (shots_taken_.back().sunk == kShipsPerPlayer ||
        (fired1 >= shots_ && fired2 >= shots_)) {
      over_ = true;
    }
  }

  std::string InformationState() const override {
    const int p = static_cast<int>(CurrentActor());
    std::string s;
    for (const Ship& ship : ships_[p]) {
      s += std::to_string(ship.cells[0]) + "-" + std::to_string(ship.cells[1]) +
           ",";
    }
    s += "|";
    for (const Shot& shot : shots_taken_) {
      s += std::to_string(shot.player) + std::to_string(shot.cell) +
           (shot.hit ? "h" : "m") + std::to_string(shot.sunk) + ",";
    }
    return s;
  }

  double Payoff() const override {
    return kShipValue * (SunkBy(0) - SunkBy(1));
  }

 private:
  struct Shot {
    int player;
    int cell;
    bool hit;
    // Ships the shooter has sunk after this shot.
    int sunk;
  };

  int Cell(int r, int c) const { return r * width_ + c; }

  bool Placing() const {
    return ships_[0].size() + ships_[1].size() < 2 * kShipsPerPlayer;
  }

  bool Occupies(int p, int cell) const {
    for (const Ship& ship : ships_[p]) {
      for (int c : ship.cells) {
        if (c == cell) return true;
      }
    }
    return false;
  }

  std::vector<int> LegalPlacements(int p) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(all_placements_.size()); ++i) {
      bool free = true;
      for (int c : all_placements_[i].cells) free &= !Occupies(p, c);
      if (free) out.push_back(i);
    }
    return out;
  }

  bool ShotBy(int p, int cell) const {
    for (const Shot& s : shots_taken_) {
      if (s.player == p && s.cell == cell) return true;
    }
    return false;
  }

  // Ships of p's opponent with every cell hit by p.
  int SunkBy(int p) const {
    int sunk = 0;
    for (const Ship& ship : ships_[1 - p]) {
      bool all = true;
      for (int c : ship.cells) all &= ShotBy(p, c);
      sunk += all;
    }
    return sunk;
  }

  int width_;
  int height_;
  int shots_;
  std::vector<Ship> all_placements_;
  std::vector<Ship> ships_[2];
  std::vector<Shot> shots_taken_;
  bool over_ = false;
};

}  // namespace

std::unique_ptr<GameState> NewBattleshipState(int width, int height,
                                              int shots) {
  if (width < 1 || height < 1 || shots < 1 ||
      width * height < kShipsPerPlayer * kShipLength ||
      width * height < shots) {
    throw std::invalid_argument("unsupported battleship parameters");
  }
  return std::make_unique<BattleshipState>(width, height, shots);
}

}  // namespace cfroco
