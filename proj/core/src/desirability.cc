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

#include "sgames/desirability.h"

#include <algorithm>
#include <numeric>

#include "win_table.h"

namespace sgames {

bool DesirabilityRelation::is_total() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

namespace {

// A minimal winning M with j in M, i not in M and M-j+i losing: the
// witness that i is not at least as desirable as j.
std::optional<Coalition> replacement_failure(
    const SimpleGame& game, const internal::WinOracle& wins, int i, int j) {
  for (Coalition m : game.min_winning()) {
    if (!contains(m, j) || contains(m, i)) continue;
    if (!wins((m & ~bit(j)) | bit(i))) return m;
  }
  return std::nullopt;
}

}  // namespace

DesirabilityRelation desirability(const SimpleGame& game) {
  internal::WinOracle wins(game);
  DesirabilityRelation rel(game.n());
  for (int i = 0; i < game.n(); ++i) {
    for (int j = 0; j < game.n(); ++j) {
      rel.set(i, j, i == j || !replacement_failure(game, wins, i, j));
    }
  }
  return rel;
}

std::optional<Coalition> strictly_more_desirable(const SimpleGame& game, int i,
                                                 int j) {
  if (i == j) throw InvalidInput("players must differ");
  if (i < 0 || j < 0 || i >= game.n() || j >= game.n()) {
    throw InvalidInput("player index outside the game");
  }
  internal::WinOracle wins(game);
  if (replacement_failure(game, wins, i, j)) return std::nullopt;
  // Not j >= i: some minimal winning X holds i, misses j and X-i+j loses.
  return replacement_failure(game, wins, j, i);
}

bool is_complete(const SimpleGame& game) {
  return desirability(game).is_total();
}

std::optional<TradingTransform> incompleteness_certificate(
    const SimpleGame& game) {
  internal::WinOracle wins(game);
  for (int i = 0; i < game.n(); ++i) {
    for (int j = i + 1; j < game.n(); ++j) {
      auto m1 = replacement_failure(game, wins, i, j);
      if (!m1) continue;
      auto m2 = replacement_failure(game, wins, j, i);
      if (!m2) continue;
      Coalition y1 = (*m1 & ~bit(j)) | bit(i);
      Coalition y2 = (*m2 & ~bit(i)) | bit(j);
      return TradingTransform{{*m1, *m2}, {y1, y2}};
    }
  }
  return std::nullopt;
}

std::optional<TradingTransform> find_swap_certificate(const SimpleGame& game) {
  internal::WinOracle wins(game);
  const auto& w = game.min_winning();
  for (size_t a = 0; a < w.size(); ++a) {
    for (size_t b = a + 1; b < w.size(); ++b) {
      for (Coalition xs = w[a] & ~w[b]; xs; xs &= xs - 1) {
        int x = lowest(xs);
        for (Coalition ys = w[b] & ~w[a]; ys; ys &= ys - 1) {
          int y = lowest(ys);
          Coalition a2 = (w[a] & ~bit(x)) | bit(y);
          Coalition b2 = (w[b] & ~bit(y)) | bit(x);
          if (!wins(a2) && !wins(b2)) {
            return TradingTransform{{w[a], w[b]}, {a2, b2}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> desirability_levels(const SimpleGame& game) {
  DesirabilityRelation rel = desirability(game);
  if (!rel.is_total()) throw NotComplete(*incompleteness_certificate(game));
  std::vector<int> score(game.n(), 0);
  for (int i = 0; i < game.n(); ++i) {
    for (int j = 0; j < game.n(); ++j) score[i] += rel.geq(i, j);
  }
  std::vector<int> order(game.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] > score[b]; });
  std::vector<std::vector<int>> levels;
  for (size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || score[order[k]] != score[order[k - 1]]) levels.emplace_back();
    levels.back().push_back(order[k]);
  }
  return levels;
}

}  // namespace sgames
