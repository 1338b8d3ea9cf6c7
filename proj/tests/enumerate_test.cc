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


#include "sgames/enumerate.h"

#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "sgames/errors.h"

namespace sgames {
namespace {

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_games(1).size(), 2u);
  EXPECT_EQ(enumerate_games(2).size(), 5u);
  EXPECT_EQ(enumerate_games(3).size(), 19u);
  EXPECT_EQ(enumerate_games(4).size(), 167u);
}

TEST(Enumerate, MatchesBruteForceAntichains) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<Coalition>> expected;
    for (auto fam : oracle::all_antichains(n)) {
      std::sort(fam.begin(), fam.end());
      expected.insert(fam);
    }
    std::set<std::vector<Coalition>> got;
    for (const auto& g : enumerate_games(n)) got.insert(g.min_winning());
    EXPECT_EQ(got, expected);
  }
}

TEST(Enumerate, Deterministic) {
  EXPECT_EQ(enumerate_games(4), enumerate_games(4));
  EXPECT_EQ(enumerate_games(1)[0].min_winning(), (std::vector<Coalition>{0}));
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(enumerate_games(0), InvalidInput);
  EXPECT_THROW(enumerate_games(5), InvalidInput);
  EXPECT_THROW(enumerate_games(6, true), InvalidInput);
}

TEST(Enumerate, FivePlayers) {
  size_t count = 0;
  for_each_game(5, [&](const SimpleGame&) { ++count; }, true);
  EXPECT_EQ(count, 7580u);
}

}  // namespace
}  // namespace sgames
