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

// Built-in benchmark games.

#ifndef CFROCO_GAMES_H_
#define CFROCO_GAMES_H_

#include <memory>
#include <string>

#include "cfroco/game_tree.h"

namespace cfroco {

// Rock-paper-scissors as a two-move tree; player 2 does not see player 1.
std::unique_ptr<GameState> NewRpsState();

// Three-card Kuhn poker, ante 1, bet 1.
std::unique_ptr<GameState> NewKuhnState();

// Leduc hold'em with `ranks` x `suits` cards: ante 1, raise 2 then 4, at most
// two raises per round, pair with the public card beats high card.
std::unique_ptr<GameState> NewLeducState(int ranks, int suits);

// Flop hold'em with `suits` x `ranks` cards: blinds 50/100, raise 100, three
// raises per round, two hole cards and a three-card flop. Player 2 opens the
// second round.
std::unique_ptr<GameState> NewFhpState(int suits, int ranks);

// Goofspiel with n cards per suit and a shuffled prize deck. Bids are
// simultaneous; the last round is forced. Payoff is the sign of the score
// difference. In the imperfect variant players only learn who won each round.
std::unique_ptr<GameState> NewGoofspielState(int n, bool imperfect);

// One die per player, bids quantity-value, call liar to end.
std::unique_ptr<GameState> NewLiarsDiceState(int sides);

// Each player places two 1x2 ships worth 4 on a width x height grid, then the
// players alternate distinct shots, `shots` each. A ship sinks once all its
// cells are hit; the shooter learns hit/miss and how many ships it has sunk.
std::unique_ptr<GameState> NewBattleshipState(int width, int height,
                                              int shots);

// Parses names such as "rps", "kuhn", "leduc", "leduc(9,2)" (ranks, suits),
// "fhp", "fhp(2,5)" (suits, ranks), "goofspiel4", "goofspiel4_imp",
// "goofspiel5", "liars_dice", "liars_dice(6)", "battleship",
// "battleship(3,2,3)". Throws std::invalid_argument on anything else.
std::unique_ptr<GameState> NewGameState(const std::string& spec);

// Expands the game named by `spec`.
GameTree BuildGame(const std::string& spec);

}  // namespace cfroco

#endif  // CFROCO_GAMES_H_
