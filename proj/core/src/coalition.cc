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

#include "sgames/coalition.h"

#include <algorithm>

#include "sgames/errors.h"

namespace sgames {

Coalition make_coalition(std::initializer_list<int> members) {
  return make_coalition(std::vector<int>(members));
}

Coalition make_coalition(const std::vector<int>& members) {
  Coalition c = 0;
  for (int i : members) {
    if (i < 0 || i >= kMaxPlayers) {
      throw InvalidInput("player index " + std::to_string(i) +
                         " outside coalition capacity");
    }
    c |= bit(i);
  }
  return c;
}

std::vector<int> members_of(Coalition c) {
  std::vector<int> out;
  out.reserve(cardinality(c));
  while (c) {
    out.push_back(lowest(c));
    c &= c - 1;
  }
  return out;
}

std::string to_string(Coalition c) {
  std::string s = "{";
  bool first = true;
  for (int i : members_of(c)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<Coalition> minimalize(std::vector<Coalition> sets) {
  std::sort(sets.begin(), sets.end(), [](Coalition a, Coalition b) {
    int sa = cardinality(a), sb = cardinality(b);
    return sa != sb ? sa < sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Coalition> kept;
  for (Coalition s : sets) {
    bool dominated = false;
    for (Coalition k : kept) {
      if (is_subset(k, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Coalition> maximalize(std::vector<Coalition> sets) {
  std::sort(sets.begin(), sets.end(), [](Coalition a, Coalition b) {
    int sa = cardinality(a), sb = cardinality(b);
    return sa != sb ? sa > sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Coalition> kept;
  for (Coalition s : sets) {
    bool dominated = false;
    for (Coalition k : kept) {
      if (is_subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool is_antichain(const std::vector<Coalition>& sets) {
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = 0; j < sets.size(); ++j) {
      if (i != j && is_subset(sets[i], sets[j])) return false;
    }
  }
  return true;
}

}  // namespace sgames
