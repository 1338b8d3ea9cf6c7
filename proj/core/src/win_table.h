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

#ifndef SGAMES_SRC_WIN_TABLE_H_
#define SGAMES_SRC_WIN_TABLE_H_

#include <vector>

#include "sgames/coalition.h"
#include "sgames/game.h"

namespace sgames::internal {

// Winning-membership oracle. Small games get a full truth table built by a
// subset-sum sweep; larger ones fall back to the antichain scan.
class WinOracle {
 public:
  static constexpr int kTableLimit = 16;

  explicit WinOracle(const SimpleGame& game) : game_(game) {
    if (game.n() > kTableLimit) return;
    table_.assign(size_t{1} << game.n(), 0);
    for (Coalition m : game.min_winning()) table_[m] = 1;
    for (int b = 0; b < game.n(); ++b) {
      const size_t step = size_t{1} << b;
      for (size_t x = 0; x < table_.size(); ++x) {
        if ((x & step) && table_[x ^ step]) table_[x] = 1;
      }
    }
  }

  bool operator()(Coalition x) const {
    if (!table_.empty()) return table_[x];
    for (Coalition m : game_.min_winning()) {
      if (is_subset(m, x)) return true;
    }
    return false;
  }

 private:
  const SimpleGame& game_;
  std::vector<char> table_;
};

}  // namespace sgames::internal

#endif  // SGAMES_SRC_WIN_TABLE_H_
