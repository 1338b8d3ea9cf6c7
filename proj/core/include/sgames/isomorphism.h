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

#ifndef SGAMES_ISOMORPHISM_H_
#define SGAMES_ISOMORPHISM_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/game.h"

namespace sgames {

// A bijection sigma (player i of a maps to sigma[i] of b) carrying the
// winning family of a onto that of b, or empty. Complete games are matched
// through their profiles; others by backtracking over players with equal
// signatures, trying one representative per desirability class of b.
std::optional<std::vector<int>> isomorphic(const SimpleGame& a,
                                           const SimpleGame& b);

// Lexicographically smallest sorted antichain over all relabellings, as
// text. Exhaustive over permutations; intended for n <= 8.
std::string canonical_key(const SimpleGame& game);

}  // namespace sgames

#endif  // SGAMES_ISOMORPHISM_H_
