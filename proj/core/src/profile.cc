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

#include "sgames/profile.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "sgames/desirability.h"
#include "sgames/errors.h"

namespace sgames {

namespace {

void validate_levels(const std::vector<int>& level_sizes) {
  if (level_sizes.empty()) throw InvalidInput("profile has no levels");
  int total = 0;
  for (int s : level_sizes) {
    if (s < 1) throw InvalidInput("level sizes must be positive");
    total += s;
  }
  if (total > kMaxPlayers) throw InvalidInput("too many players for a game");
}

// Calls f on every profile 0 <= l_i <= sizes_i in mixed-radix order.
template <typename F>
void for_each_profile(const std::vector<int>& sizes, F&& f) {
  Profile p(sizes.size(), 0);
  while (true) {
    f(p);
    size_t i = 0;
    while (i < p.size() && p[i] == sizes[i]) p[i++] = 0;
    if (i == p.size()) return;
    ++p[i];
  }
}

bool dominates(const Profile& p, const Profile& s) {
  int ps = 0, ss = 0;
  for (size_t t = 0; t < p.size(); ++t) {
    ps += p[t];
    ss += s[t];
    if (ps < ss) return false;
  }
  return true;
}

std::function<bool(const Profile&)> prefix_predicate(
    const CompleteProfile& profile) {
  const int m = static_cast<int>(profile.level_sizes.size());
  for (const Profile& s : profile.shift_min) {
    if (static_cast<int>(s.size()) != m) {
      throw InvalidInput("profile " + profile_to_string(s) +
                         " has the wrong number of levels");
    }
    for (int l = 0; l < m; ++l) {
      if (s[l] < 0 || s[l] > profile.level_sizes[l]) {
        throw InvalidInput("profile " + profile_to_string(s) +
                           " exceeds a level size");
      }
    }
  }
  if (profile.shift_min.empty()) {
    throw InvalidInput("profile has no shift-minimal coalitions");
  }
  return [shift_min = profile.shift_min](const Profile& p) {
    for (const Profile& s : shift_min) {
      if (dominates(p, s)) return true;
    }
    return false;
  };
}

// Adds every coalition with profile p, drawing level l from blocks[l].
void expand(const Profile& p, const std::vector<std::vector<int>>& blocks,
            size_t level, Coalition acc, std::vector<Coalition>& out) {
  if (level == p.size()) {
    out.push_back(acc);
    return;
  }
  const auto& block = blocks[level];
  const int want = p[level];
  std::vector<int> idx(want);
  std::iota(idx.begin(), idx.end(), 0);
  const int size = static_cast<int>(block.size());
  while (true) {
    Coalition c = acc;
    for (int k : idx) c |= bit(block[k]);
    expand(p, blocks, level + 1, c, out);
    int k = want - 1;
    while (k >= 0 && idx[k] == size - want + k) --k;
    if (k < 0) return;
    ++idx[k];
    for (int t = k + 1; t < want; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

std::string profile_to_string(const Profile& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string to_string(const CompleteProfile& p) {
  std::string s = "levels" + profile_to_string(p.level_sizes) + " shift_min[";
  for (size_t i = 0; i < p.shift_min.size(); ++i) {
    if (i) s += ",";
    s += profile_to_string(p.shift_min[i]);
  }
  return s + "]";
}

std::vector<std::vector<int>> level_blocks(
    const std::vector<int>& level_sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (int s : level_sizes) {
    blocks.emplace_back(s);
    std::iota(blocks.back().begin(), blocks.back().end(), next);
    next += s;
  }
  return blocks;
}

SimpleGame game_from_profile_predicate(
    const std::vector<int>& level_sizes,
    const std::function<bool(const Profile&)>& wins) {
  validate_levels(level_sizes);
  std::vector<Profile> minimal;
  for_each_profile(level_sizes, [&](const Profile& p) {
    if (!wins(p)) return;
    Profile q = p;
    for (size_t l = 0; l < q.size(); ++l) {
      if (q[l] == 0) continue;
      --q[l];
      bool smaller_wins = wins(q);
      ++q[l];
      if (smaller_wins) return;
    }
    minimal.push_back(p);
  });
  if (minimal.empty()) throw InvalidInput("no profile is winning");
  auto blocks = level_blocks(level_sizes);
  std::vector<Coalition> w;
  for (const Profile& p : minimal) expand(p, blocks, 0, 0, w);
  int n = std::accumulate(level_sizes.begin(), level_sizes.end(), 0);
  return SimpleGame(n, std::move(w));
}

SimpleGame from_profile(const CompleteProfile& profile) {
  validate_levels(profile.level_sizes);
  return game_from_profile_predicate(profile.level_sizes,
                                     prefix_predicate(profile));
}

std::vector<Profile> shift_minimal(const CompleteProfile& profile) {
  validate_levels(profile.level_sizes);
  auto wins = prefix_predicate(profile);
  const auto& sizes = profile.level_sizes;
  std::vector<Profile> out;
  for_each_profile(sizes, [&](const Profile& p) {
    if (!wins(p)) return;
    Profile q = p;
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      --q[i];
      if (wins(q)) return;
      for (size_t j = i + 1; j < q.size(); ++j) {
        if (q[j] == sizes[j]) continue;
        ++q[j];
        bool shifted_wins = wins(q);
        --q[j];
        if (shifted_wins) return;
      }
      ++q[i];
    }
    out.push_back(p);
  });
  std::sort(out.rbegin(), out.rend());
  return out;
}

CompleteProfile to_profile(const SimpleGame& game) {
  auto levels = desirability_levels(game);
  const int m = static_cast<int>(levels.size());
  std::vector<int> level_of(game.n());
  CompleteProfile out;
  for (int l = 0; l < m; ++l) {
    out.level_sizes.push_back(static_cast<int>(levels[l].size()));
    for (int i : levels[l]) level_of[i] = l;
  }
  auto representative = [&](const Profile& p) {
    Coalition c = 0;
    for (int l = 0; l < m; ++l) {
      for (int k = 0; k < p[l]; ++k) c |= bit(levels[l][k]);
    }
    return c;
  };
  std::set<Profile> candidates;
  for (Coalition mw : game.min_winning()) {
    Profile p(m, 0);
    for (int i : members_of(mw)) ++p[level_of[i]];
    candidates.insert(p);
  }
  for (const Profile& p : candidates) {
    bool minimal = true;
    Profile q = p;
    for (int i = 0; i < m && minimal; ++i) {
      if (q[i] == 0) continue;
      --q[i];
      for (int j = i + 1; j < m && minimal; ++j) {
        if (q[j] == out.level_sizes[j]) continue;
        ++q[j];
        if (is_winning(game, representative(q))) minimal = false;
        --q[j];
      }
      ++q[i];
    }
    if (minimal) out.shift_min.push_back(p);
  }
  std::sort(out.shift_min.rbegin(), out.shift_min.rend());
  return out;
}

}  // namespace sgames
