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


#ifndef SGAMES_WEIGHTS_H_
#define SGAMES_WEIGHTS_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/game.h"
#include "sgames/rational.h"
#include "sgames/trading.h"

namespace sgames {

struct IntegerForm {
  Integer quota;
  std::vector<Integer> weights;
};

// [q; w_1, ..., w_n]: X wins exactly when its weight reaches q.
struct WeightedRepresentation {
  Rational quota;
  std::vector<Rational> weights;
  std::optional<IntegerForm> integer_form;
};

std::string to_string(const WeightedRepresentation& rep);

// Exact solve of w >= 0, w(M) >= q for minimal winning M and
// q - w(L) >= 1 for maximal losing L. Empty when the game is not weighted.
// The game with every coalition winning gets quota 0 and zero weights.
std::optional<WeightedRepresentation> synthesize_weights(
    const SimpleGame& game);

// Checks nonnegativity and the threshold biconditional on minimal winning
// and maximal losing coalitions, for the integer form too when present.
// Throws InvalidInput on a dimension mismatch.
bool verify_representation(const SimpleGame& game,
                           const WeightedRepresentation& rep);

bool is_weighted(const SimpleGame& game);

// Certificate of nonweightedness read off the dual solution: integer
// multiplicities of minimal winning and maximal losing coalitions, with
// surplus occurrences trimmed from the losing side. Throws
// PreconditionViolation for weighted games.
TradingTransform farkas_certificate(const SimpleGame& game);

}  // namespace sgames

#endif  // SGAMES_WEIGHTS_H_
