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


#ifndef SGAMES_ENUMERATE_H_
#define SGAMES_ENUMERATE_H_

#include <functional>
#include <vector>

#include "sgames/game.h"

namespace sgames {

inline constexpr int kEnumerateDefaultCap = 4;
inline constexpr int kEnumerateHardCap = 5;

// Every nonempty antichain of subsets of {0..n-1}, including {emptyset},
// in depth-first order over subsets taken in increasing bitmask order.
// n = 5 needs allow_five. Throws InvalidInput otherwise.
void for_each_game(int n, const std::function<void(const SimpleGame&)>& visit,
                   bool allow_five = false);
std::vector<SimpleGame> enumerate_games(int n, bool allow_five = false);

// One representative per isomorphism class, first in enumeration order.
std::vector<SimpleGame> collapse_isomorphic(const std::vector<SimpleGame>& games);

}  // namespace sgames

#endif  // SGAMES_ENUMERATE_H_
