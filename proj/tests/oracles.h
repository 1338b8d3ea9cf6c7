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


// Brute-force oracles shared by the unit tests. They work from the
// definitions over all 2^n coalitions and never call the routines under
// test beyond SimpleGame construction.

#ifndef SGAMES_TESTS_ORACLES_H_
#define SGAMES_TESTS_ORACLES_H_

#include <set>
#include <vector>

#include "sgames/game.h"

namespace sgames::oracle {

inline bool wins(const SimpleGame& g, Coalition x) {
  for (Coalition m : g.min_winning()) {
    if ((m & ~x) == 0) return true;
  }
  return false;
}

inline std::vector<Coalition> winning_set(const SimpleGame& g) {
  std::vector<Coalition> out;
  for (Coalition x = 0; x <= full_set(g.n()); ++x) {
    if (wins(g, x)) out.push_back(x);
  }
  return out;
}

// i can replace j: X + j winning implies X + i winning for X avoiding both.
inline bool geq(const SimpleGame& g, int i, int j) {
  for (Coalition x = 0; x <= full_set(g.n()); ++x) {
    if (contains(x, i) || contains(x, j)) continue;
    if (wins(g, x | bit(j)) && !wins(g, x | bit(i))) return false;
  }
  return true;
}

inline bool complete(const SimpleGame& g) {
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (!geq(g, i, j) && !geq(g, j, i)) return false;
    }
  }
  return true;
}

// Every game on n <= 4 players given by integer weights 0..4 and a quota
// up to 16, as sorted minimal winning families.
inline std::set<std::vector<Coalition>> small_weighted(int n) {
  std::set<std::vector<Coalition>> out;
  std::vector<int> w(n, 0);
  while (true) {
    for (int q = 0; q <= 16; ++q) {
      std::vector<Coalition> winning;
      for (Coalition x = 0; x <= full_set(n); ++x) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += contains(x, i) ? w[i] : 0;
        if (s >= q) winning.push_back(x);
      }
      if (!winning.empty()) {
        out.insert(SimpleGame::from_winning(n, winning).min_winning());
      }
    }
    int i = 0;
    while (i < n && w[i] == 4) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return out;
}

// Composite by the definition, in the library's layout: outer players
// other than the pivot keep their order, then the inner players.
inline SimpleGame compose_by_definition(const SimpleGame& outer, int pivot,
                                        const SimpleGame& inner) {
  const int m = outer.n() - 1;
  const int n = m + inner.n();
  std::vector<Coalition> winning;
  for (Coalition s = 0; s <= full_set(n); ++s) {
    Coalition x = 0;
    for (int i = 0; i < m; ++i) {
      if (contains(s, i)) x |= bit(i < pivot ? i : i + 1);
    }
    if (wins(inner, s >> m)) x |= bit(pivot);
    if (wins(outer, x)) winning.push_back(s);
  }
  return SimpleGame::from_winning(n, winning);
}

// Every nonempty antichain on n players, by filtering all families of
// subsets. Feasible for n <= 3.
inline std::vector<std::vector<Coalition>> all_antichains(int n) {
  const int subsets = 1 << n;
  std::vector<std::vector<Coalition>> out;
  for (unsigned long mask = 1; mask < (1UL << subsets); ++mask) {
    std::vector<Coalition> fam;
    for (int s = 0; s < subsets; ++s) {
      if (mask >> s & 1) fam.push_back(s);
    }
    bool ok = true;
    for (Coalition a : fam) {
      for (Coalition b : fam) {
        if (a != b && (a & ~b) == 0) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

}  // namespace sgames::oracle

#endif  // SGAMES_TESTS_ORACLES_H_
