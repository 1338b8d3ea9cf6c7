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

#ifndef SGAMES_PROFILE_H_
#define SGAMES_PROFILE_H_

#include <functional>
#include <string>
#include <vector>

#include "sgames/game.h"

namespace sgames {

// Per-level player counts (l_1, ..., l_m) of a coalition.
using Profile = std::vector<int>;

// Multiset view of a complete game. Level 1 is the most desirable; players
// of level 1 take indices 0..n_1-1, level 2 the next n_2, and so on.
struct CompleteProfile {
  std::vector<int> level_sizes;
  std::vector<Profile> shift_min;  // sorted descending

  bool operator==(const CompleteProfile&) const = default;
};

std::string to_string(const CompleteProfile& p);
std::string profile_to_string(const Profile& p);

// Levels by descending desirability and the shift-minimal winning profiles.
// Throws NotComplete (with a certificate) for incomplete games.
CompleteProfile to_profile(const SimpleGame& game);

// A profile wins when its prefix sums dominate those of some shift-minimal
// profile. Throws InvalidInput on bad level sizes or profiles.
SimpleGame from_profile(const CompleteProfile& profile);

// Recomputed from the game the profile defines: winning profiles whose
// single removals and single shifts to any lower level all lose.
std::vector<Profile> shift_minimal(const CompleteProfile& profile);

// Game on sum(level_sizes) players where a coalition wins exactly when
// `wins` accepts its profile. `wins` must be monotone in the profile.
SimpleGame game_from_profile_predicate(
    const std::vector<int>& level_sizes,
    const std::function<bool(const Profile&)>& wins);

// Player indices of each level under the consecutive layout.
std::vector<std::vector<int>> level_blocks(const std::vector<int>& level_sizes);

}  // namespace sgames

#endif  // SGAMES_PROFILE_H_
