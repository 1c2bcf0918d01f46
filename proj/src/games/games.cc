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

#include "cfroco/games.h"

#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfroco {
namespace {

std::vector<int> ParseArgs(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<int> WithDefaults(const std::vector<int>& given,
                              const std::vector<int>& defaults,
                              const std::string& spec) {
  if (given.empty()) return defaults;
  if (given.size() != defaults.size()) {
    throw std::invalid_argument("wrong number of parameters in '" + spec + "'");
  }
  return given;
}

}  // namespace

std::unique_ptr<GameState> NewGameState(const std::string& spec) {
  static const std::regex kPattern(
      R"(^([a-z_]+?)(\d*)(_imp)?(?:\(([0-9,\s]*)\))?$)");
  std::smatch m;
  if (!std::regex_match(spec, m, kPattern)) {
    throw std::invalid_argument("cannot parse game '" + spec + "'");
  }
  const std::string family = m[1];
  const std::string suffix = m[2];
  const bool imp = m[3].matched;
  const std::vector<int> args = ParseArgs(m[4]);
  const auto no_suffix = [&] {
    if (!suffix.empty() || imp) {
      throw std::invalid_argument("unknown game '" + spec + "'");
    }
  };
  if (family == "goofspiel") {
    if (!args.empty() || suffix.empty()) {
      throw std::invalid_argument("use goofspielN or goofspielN_imp");
    }
    return NewGoofspielState(std::stoi(suffix), imp);
  }
  no_suffix();
  if (family == "rps" && args.empty()) return NewRpsState();
  if (family == "kuhn" && args.empty()) return NewKuhnState();
  if (family == "leduc") {
    const auto a = WithDefaults(args, {3, 2}, spec);
    return NewLeducState(a[0], a[1]);
  }
  if (family == "fhp") {
    const auto a = WithDefaults(args, {2, 5}, spec);
    return NewFhpState(a[0], a[1]);
  }
  if (family == "liars_dice") {
    const auto a = WithDefaults(args, {6}, spec);
    return NewLiarsDiceState(a[0]);
  }
  if (family == "battleship") {
    const auto a = WithDefaults(args, {3, 2, 3}, spec);
    return NewBattleshipState(a[0], a[1], a[2]);
  }
  throw std::invalid_argument("unknown game '" + spec + "'");
}

GameTree BuildGame(const std::string& spec) {
  return BuildGameTree(*NewGameState(spec), spec);
}

}  // namespace cfroco
