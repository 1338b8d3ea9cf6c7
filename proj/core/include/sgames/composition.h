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


#ifndef SGAMES_COMPOSITION_H_
#define SGAMES_COMPOSITION_H_

#include <optional>
#include <vector>

#include "sgames/coalition.h"
#include "sgames/game.h"

namespace sgames {

// outer with its pivot replaced by inner. The composite layout lists the
// outer players other than the pivot in order, then the inner players;
// player_map sends layout index c to player player_map[c] of the result.
// An empty player_map means the identity.
struct CompositionSpec {
  SimpleGame outer;
  int pivot = 0;
  SimpleGame inner;
  std::vector<int> player_map;
};

int composite_size(const CompositionSpec& spec);

// Layout images: an outer coalition avoiding the pivot, and an inner
// coalition of a composite whose outer game has outer_n players.
Coalition embed_outer(Coalition x, int pivot);
Coalition embed_inner(Coalition y, int outer_n);

// Minimal winning coalitions are those of outer avoiding the pivot and
// (M - pivot) + Y for minimal winning M containing it and Y of inner.
// Labels are carried over when either side has them; an inner label that
// collides with an outer one is prefixed by the pivot's label.
SimpleGame compose(const CompositionSpec& spec);
SimpleGame compose(const SimpleGame& outer, int pivot,
                   const SimpleGame& inner);

// x + g wins. Throws InvalidInput when g is in x.
bool g_winning(const SimpleGame& game, int g, Coalition x);

// Every decomposition with inner support B, 2 <= |B| <= n-1, verified by
// recomposition. The outer game lives on B^c in order with the pivot as its
// last player. At most `limit` results when limit > 0.
std::vector<CompositionSpec> find_decompositions(const SimpleGame& game,
                                                 int limit = 0);

bool is_indecomposable(const SimpleGame& game);

struct Strip {
  int m = 0;
  // Game on the remaining players; degenerate when none remain or nothing
  // wins there.
  Restriction residual;
};

// m vetoers with residual the reduced game on the rest, so that
// game = U_{m+1} composed with the residual.
std::optional<Strip> strip_vetoers(const SimpleGame& game);
// m passers with residual the subgame on the rest, so that
// game = A_{m+1} composed with the residual.
std::optional<Strip> strip_passers(const SimpleGame& game);

}  // namespace sgames

#endif  // SGAMES_COMPOSITION_H_
