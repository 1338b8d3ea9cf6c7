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

#include "sgames/game.h"

#include <algorithm>
#include <set>

#include "sgames/errors.h"

namespace sgames {

SimpleGame::SimpleGame(int n, std::vector<Coalition> min_winning,
                       std::vector<std::string> labels)
    : n_(n), min_winning_(std::move(min_winning)), labels_(std::move(labels)) {
  if (n_ < 1 || n_ > kMaxPlayers) {
    throw InvalidInput("player count " + std::to_string(n_) +
                       " outside 1.." + std::to_string(kMaxPlayers));
  }
  if (min_winning_.empty()) {
    throw InvalidInput("minimal winning family is empty");
  }
  for (Coalition m : min_winning_) {
    if (!is_subset(m, full_set(n_))) {
      throw InvalidInput("coalition " + sgames::to_string(m) +
                         " names a player outside 0.." +
                         std::to_string(n_ - 1));
    }
  }
  std::sort(min_winning_.begin(), min_winning_.end());
  if (std::adjacent_find(min_winning_.begin(), min_winning_.end()) !=
      min_winning_.end()) {
    throw InvalidInput("minimal winning family has duplicates");
  }
  if (!is_antichain(min_winning_)) {
    throw InvalidInput("minimal winning family is not an antichain");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n_) {
      throw InvalidInput("label count differs from player count");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n_) {
      throw InvalidInput("player labels are not unique");
    }
  }
}

SimpleGame SimpleGame::from_winning(int n, std::vector<Coalition> winning,
                                    std::vector<std::string> labels) {
  return SimpleGame(n, minimalize(std::move(winning)), std::move(labels));
}

std::string SimpleGame::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::string SimpleGame::to_string() const {
  std::string s = "n=" + std::to_string(n_) + " W=[";
  for (size_t i = 0; i < min_winning_.size(); ++i) {
    if (i) s += ",";
    s += sgames::to_string(min_winning_[i]);
  }
  return s + "]";
}

bool is_winning(const SimpleGame& game, Coalition x) {
  if (!is_subset(x, game.players())) {
    throw InvalidInput("coalition " + to_string(x) +
                       " names a player outside the game");
  }
  for (Coalition m : game.min_winning()) {
    if (is_subset(m, x)) return true;
  }
  return false;
}

namespace {

constexpr int kDenseLimit = 20;

// Upward closure of the minimal winning family over all 2^n coalitions.
std::vector<Coalition> maximal_losing_dense(const SimpleGame& game) {
  const Coalition all = game.players();
  std::vector<char> wins(all + 1, 0);
  for (Coalition m : game.min_winning()) wins[m] = 1;
  for (int i = 0; i < game.n(); ++i) {
    for (Coalition x = 0; x <= all; ++x) {
      if (!contains(x, i) && wins[x]) wins[x | bit(i)] = 1;
    }
  }
  std::vector<Coalition> out;
  for (Coalition x = 0; x <= all; ++x) {
    if (wins[x]) continue;
    bool maximal = true;
    for (Coalition rest = all & ~x; rest && maximal; rest &= rest - 1) {
      maximal = wins[x | bit(lowest(rest))];
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Coalition> maximal_losing(const SimpleGame& game) {
  if (game.n() <= kDenseLimit) return maximal_losing_dense(game);
  // Berge's incremental minimal-transversal computation.
  std::vector<Coalition> edges = game.min_winning();
  std::sort(edges.begin(), edges.end(), [](Coalition a, Coalition b) {
    return cardinality(a) < cardinality(b);
  });
  std::vector<Coalition> transversals = {0};
  for (Coalition e : edges) {
    if (e == 0) return {};
    std::vector<Coalition> next;
    next.reserve(transversals.size() * 2);
    for (Coalition t : transversals) {
      if (t & e) {
        next.push_back(t);
      } else {
        for (Coalition rest = e; rest; rest &= rest - 1) {
          next.push_back(t | bit(lowest(rest)));
        }
      }
    }
    transversals = minimalize(std::move(next));
  }
  std::vector<Coalition> out;
  out.reserve(transversals.size());
  for (Coalition t : transversals) out.push_back(game.players() & ~t);
  std::sort(out.begin(), out.end());
  return out;
}

Coalition dummies(const SimpleGame& game) {
  Coalition used = 0;
  for (Coalition m : game.min_winning()) used |= m;
  return game.players() & ~used;
}

Coalition vetoers(const SimpleGame& game) {
  Coalition common = game.players();
  for (Coalition m : game.min_winning()) common &= m;
  return common;
}

Coalition passers(const SimpleGame& game) {
  Coalition out = 0;
  for (Coalition m : game.min_winning()) {
    if (cardinality(m) == 1) out |= m;
  }
  // With {} winning every singleton wins.
  if (is_trivial_full(game)) out = game.players();
  return out;
}

bool is_trivial_full(const SimpleGame& game) {
  return game.min_winning().size() == 1 && game.min_winning()[0] == 0;
}

namespace {

Coalition compress(Coalition x, const std::vector<int>& new_index) {
  Coalition out = 0;
  for (Coalition rest = x; rest; rest &= rest - 1) {
    out |= bit(new_index[lowest(rest)]);
  }
  return out;
}

// Players outside `a`, their new indices, and the labels they carry.
struct Remap {
  std::vector<int> player_map;
  std::vector<int> new_index;
  std::vector<std::string> labels;
};

Remap remap_outside(const SimpleGame& game, Coalition a) {
  Remap r;
  r.new_index.assign(game.n(), -1);
  for (int i = 0; i < game.n(); ++i) {
    if (contains(a, i)) continue;
    r.new_index[i] = static_cast<int>(r.player_map.size());
    r.player_map.push_back(i);
    if (game.has_labels()) r.labels.push_back(game.labels()[i]);
  }
  return r;
}

}  // namespace

Restriction subgame(const SimpleGame& game, Coalition a) {
  if (!is_subset(a, game.players())) {
    throw InvalidInput("coalition " + to_string(a) +
                       " names a player outside the game");
  }
  Remap r = remap_outside(game, a);
  Restriction out;
  out.player_map = r.player_map;
  if (r.player_map.empty()) return out;
  std::vector<Coalition> kept;
  for (Coalition m : game.min_winning()) {
    if ((m & a) == 0) kept.push_back(compress(m, r.new_index));
  }
  if (kept.empty()) return out;
  out.game.emplace(static_cast<int>(r.player_map.size()), std::move(kept),
                   std::move(r.labels));
  return out;
}

Restriction reduced_game(const SimpleGame& game, Coalition a) {
  if (!is_subset(a, game.players())) {
    throw InvalidInput("coalition " + to_string(a) +
                       " names a player outside the game");
  }
  Remap r = remap_outside(game, a);
  Restriction out;
  out.player_map = r.player_map;
  if (r.player_map.empty()) return out;
  std::vector<Coalition> rest;
  for (Coalition m : game.min_winning()) {
    rest.push_back(compress(m & ~a, r.new_index));
  }
  out.game = SimpleGame::from_winning(static_cast<int>(r.player_map.size()),
                                      std::move(rest), std::move(r.labels));
  return out;
}

Coalition map_coalition(Coalition x, const std::vector<int>& sigma) {
  return compress(x, sigma);
}

SimpleGame permute(const SimpleGame& game, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != game.n()) {
    throw InvalidInput("permutation size differs from player count");
  }
  std::vector<Coalition> w;
  w.reserve(game.min_winning().size());
  for (Coalition m : game.min_winning()) w.push_back(compress(m, sigma));
  std::vector<std::string> labels;
  if (game.has_labels()) {
    labels.resize(game.n());
    for (int i = 0; i < game.n(); ++i) labels[sigma[i]] = game.labels()[i];
  }
  return SimpleGame(game.n(), std::move(w), std::move(labels));
}

}  // namespace sgames
