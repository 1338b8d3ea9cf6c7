// Copyright 2026 The sgames Authors.
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

#ifndef SGAMES_GAME_H_
#define SGAMES_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/coalition.h"

namespace sgames {

// A monotone simple game stored as its antichain of minimal winning
// coalitions. Winning coalitions are the upward closure of that antichain.
// The antichain {{}} (every coalition wins) is a valid game.
class SimpleGame {
 public:
  // Throws InvalidInput unless 1 <= n <= 64, min_winning is a nonempty
  // antichain over players 0..n-1 and labels (if given) are n distinct
  // strings.
  SimpleGame(int n, std::vector<Coalition> min_winning,
             std::vector<std::string> labels = {});

  // Minimalizes an arbitrary nonempty family of winning coalitions first.
  static SimpleGame from_winning(int n, std::vector<Coalition> winning,
                                 std::vector<std::string> labels = {});

  int n() const { return n_; }
  Coalition players() const { return full_set(n_); }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // The label of player i, or its index as text when unlabeled.
  std::string label(int i) const;

  // Same player count and antichain; labels are ignored.
  bool operator==(const SimpleGame& other) const {
    return n_ == other.n_ && min_winning_ == other.min_winning_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<Coalition> min_winning_;  // sorted ascending
  std::vector<std::string> labels_;
};

// Throws InvalidInput when x has members outside 0..n-1.
bool is_winning(const SimpleGame& game, Coalition x);

// Inclusion-maximal losing coalitions (complements of the minimal
// transversals of the minimal winning family), sorted ascending. Empty for
// the game where every coalition wins.
std::vector<Coalition> maximal_losing(const SimpleGame& game);

Coalition dummies(const SimpleGame& game);
Coalition vetoers(const SimpleGame& game);
Coalition passers(const SimpleGame& game);

// True for the antichain {{}}, where the empty coalition already wins.
bool is_trivial_full(const SimpleGame& game);

// Result of restricting a game to the complement of a coalition. `game` is
// empty when the restriction is degenerate: no players remain, or no
// winning coalition survives. player_map[i] is the original index of new
// player i.
struct Restriction {
  std::optional<SimpleGame> game;
  std::vector<int> player_map;

  bool degenerate() const { return !game.has_value(); }
};

// Winning sets {X subset of A^c : X in W}.
Restriction subgame(const SimpleGame& game, Coalition a);
// Winning sets {X subset of A^c : X union A in W}.
Restriction reduced_game(const SimpleGame& game, Coalition a);

// The game with players relabelled: player i of `game` becomes sigma[i].
SimpleGame permute(const SimpleGame& game, const std::vector<int>& sigma);

// Image of x under sigma.
Coalition map_coalition(Coalition x, const std::vector<int>& sigma);

}  // namespace sgames

#endif  // SGAMES_GAME_H_
