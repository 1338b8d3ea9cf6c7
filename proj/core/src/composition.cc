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


#include "sgames/composition.h"

#include <set>
#include <unordered_set>

#include "sgames/errors.h"

namespace sgames {

namespace {

std::vector<std::string> composite_labels(const SimpleGame& outer, int pivot,
                                          const SimpleGame& inner) {
  if (!outer.has_labels() && !inner.has_labels()) return {};
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (int i = 0; i < outer.n(); ++i) {
    if (i == pivot) continue;
    labels.push_back(outer.label(i));
    seen.insert(labels.back());
  }
  for (int i = 0; i < inner.n(); ++i) {
    std::string l = inner.label(i);
    if (seen.count(l)) l = outer.label(pivot) + "." + l;
    if (!seen.insert(l).second) return {};
    labels.push_back(l);
  }
  return labels;
}

}  // namespace

Coalition embed_outer(Coalition x, int pivot) {
  const Coalition low = x & (bit(pivot) - 1);
  const Coalition high = (x >> 1) & ~(bit(pivot) - 1);
  return low | high;
}

Coalition embed_inner(Coalition y, int outer_n) { return y << (outer_n - 1); }

int composite_size(const CompositionSpec& spec) {
  return spec.outer.n() + spec.inner.n() - 1;
}

SimpleGame compose(const CompositionSpec& spec) {
  const int n = composite_size(spec);
  if (spec.pivot < 0 || spec.pivot >= spec.outer.n()) {
    throw InvalidInput("pivot " + std::to_string(spec.pivot) +
                       " outside the outer game");
  }
  if (n > kMaxPlayers) throw InvalidInput("composite exceeds 64 players");
  const int shift = spec.outer.n() - 1;
  std::vector<Coalition> w;
  for (Coalition m : spec.outer.min_winning()) {
    const Coalition base = embed_outer(m & ~bit(spec.pivot), spec.pivot);
    if (!contains(m, spec.pivot)) {
      w.push_back(base);
      continue;
    }
    for (Coalition y : spec.inner.min_winning()) w.push_back(base | y << shift);
  }
  // An inner game where the empty coalition wins makes the pivot free, so
  // the formula can produce nested sets.
  if (is_trivial_full(spec.inner)) w = minimalize(std::move(w));
  std::vector<std::string> labels =
      composite_labels(spec.outer, spec.pivot, spec.inner);
  SimpleGame layout(n, std::move(w), std::move(labels));
  if (spec.player_map.empty()) return layout;
  if (static_cast<int>(spec.player_map.size()) != n) {
    throw InvalidInput("player_map has the wrong length");
  }
  return permute(layout, spec.player_map);
}

SimpleGame compose(const SimpleGame& outer, int pivot,
                   const SimpleGame& inner) {
  return compose(CompositionSpec{outer, pivot, inner, {}});
}

bool g_winning(const SimpleGame& game, int g, Coalition x) {
  if (g < 0 || g >= game.n()) throw InvalidInput("player outside the game");
  if (contains(x, g)) {
    throw InvalidInput("g_winning: player " + std::to_string(g) +
                       " is already in " + to_string(x));
  }
  return is_winning(game, x | bit(g));
}

namespace {

Coalition compress(Coalition x, Coalition support) {
  Coalition out = 0;
  int k = 0;
  for (Coalition rest = support; rest; rest &= rest - 1, ++k) {
    if (contains(x, lowest(rest))) out |= bit(k);
  }
  return out;
}

std::optional<CompositionSpec> decompose_over(
    const SimpleGame& game, Coalition b,
    const std::unordered_set<Coalition>& minimal) {
  const int n = game.n();
  const Coalition rest = game.players() & ~b;
  const int outer_n = n - cardinality(b) + 1;
  const int pivot = outer_n - 1;
  // Exchanging the parts inside b of two minimal winning coalitions that
  // meet b gives minimal winning coalitions again.
  bool first = true;
  Coalition out1 = 0, in1 = 0;
  for (Coalition m : game.min_winning()) {
    if ((m & b) == 0) continue;
    if (first) {
      out1 = m & rest;
      in1 = m & b;
      first = false;
    } else if (!minimal.count(out1 | (m & b)) ||
               !minimal.count((m & rest) | in1)) {
      return std::nullopt;
    }
  }
  // Minimal winning coalitions meeting b are the products of distinct
  // outside parts and distinct inside parts.
  std::vector<Coalition> outer_w, outside, inside;
  for (Coalition m : game.min_winning()) {
    if ((m & b) == 0) {
      outer_w.push_back(compress(m, rest));
    } else {
      outside.push_back(m & rest);
      inside.push_back(m & b);
    }
  }
  const size_t touching = inside.size();
  if (touching == 0) return std::nullopt;
  for (auto* v : {&outside, &inside}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (outside.size() * inside.size() != touching) return std::nullopt;
  for (Coalition x : outside) outer_w.push_back(compress(x, rest) | bit(pivot));
  std::vector<Coalition> inner_w;
  for (Coalition y : inside) inner_w.push_back(compress(y, b));
  if (!is_antichain(outer_w) || !is_antichain(inner_w)) return std::nullopt;
  std::vector<int> map;
  for (int i : members_of(rest)) map.push_back(i);
  for (int i : members_of(b)) map.push_back(i);
  CompositionSpec spec{SimpleGame(outer_n, std::move(outer_w)), pivot,
                       SimpleGame(cardinality(b), std::move(inner_w)),
                       std::move(map)};
  if (!(compose(spec) == game)) return std::nullopt;
  return spec;
}

}  // namespace

std::vector<CompositionSpec> find_decompositions(const SimpleGame& game,
                                                 int limit) {
  const int n = game.n();
  if (n > 24) throw InvalidInput("find_decompositions supports n <= 24");
  std::vector<CompositionSpec> out;
  const Coalition all = game.players();
  const std::unordered_set<Coalition> minimal(game.min_winning().begin(),
                                              game.min_winning().end());
  for (Coalition b = 1; b < all; ++b) {
    if (cardinality(b) < 2) continue;
    if (auto spec = decompose_over(game, b, minimal)) {
      out.push_back(std::move(*spec));
      if (limit > 0 && static_cast<int>(out.size()) >= limit) break;
    }
  }
  return out;
}

bool is_indecomposable(const SimpleGame& game) {
  return find_decompositions(game, 1).empty();
}

std::optional<Strip> strip_vetoers(const SimpleGame& game) {
  const Coalition v = vetoers(game);
  if (v == 0) return std::nullopt;
  return Strip{cardinality(v), reduced_game(game, v)};
}

std::optional<Strip> strip_passers(const SimpleGame& game) {
  const Coalition p = passers(game);
  if (p == 0) return std::nullopt;
  return Strip{cardinality(p), subgame(game, p)};
}

}  // namespace sgames
