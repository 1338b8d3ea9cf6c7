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


#include "sgames/game.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sgames/catalog.h"
#include "sgames/enumerate.h"
#include "sgames/errors.h"
#include "sgames/suites.h"

namespace sgames {
namespace {

TEST(SimpleGame, ValidatesInput) {
  EXPECT_THROW(SimpleGame(0, {1}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {0b100}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {0b01, 0b11}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {0b01, 0b01}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {0b01}, {"a"}), InvalidInput);
  EXPECT_THROW(SimpleGame(2, {0b01}, {"a", "a"}), InvalidInput);
  EXPECT_NO_THROW(SimpleGame(2, {0b01}, {"a", "b"}));
}

TEST(SimpleGame, FromWinningMinimalizes) {
  const auto g = SimpleGame::from_winning(3, {0b011, 0b111, 0b101, 0b001});
  EXPECT_EQ(g.min_winning(), (std::vector<Coalition>{0b001}));
}

TEST(SimpleGame, IsWinning) {
  const SimpleGame h32 = make_k_out_of_n(3, 2);
  EXPECT_TRUE(is_winning(h32, make_coalition({0, 2})));
  EXPECT_FALSE(is_winning(h32, make_coalition({1})));
  const SimpleGame unsc = make_unsc();
  EXPECT_TRUE(is_winning(unsc, unsc.players()));
  EXPECT_FALSE(is_winning(unsc, full_set(5) | make_coalition({5, 6, 7})));
  EXPECT_THROW(is_winning(h32, bit(3)), InvalidInput);
}

TEST(SimpleGame, MaximalLosingMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_games(n)) {
      std::vector<Coalition> losing;
      for (Coalition x = 0; x <= g.players(); ++x) {
        if (!oracle::wins(g, x)) losing.push_back(x);
      }
      auto expect = maximalize(losing);
      auto got = maximal_losing(g);
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, expect) << g.to_string();
    }
  }
}

TEST(SimpleGame, MaximalLosingExamples) {
  auto sorted = [](std::vector<Coalition> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(maximal_losing(make_k_out_of_n(3, 2))),
            (std::vector<Coalition>{1, 2, 4}));
  EXPECT_EQ(sorted(maximal_losing(make_unanimity(2))),
            (std::vector<Coalition>{1, 2}));
  // Council: every permanent member is a vetoer, so losing coalitions miss
  // one of them or hold at most three elected members.
  const auto ml = maximal_losing(make_unsc());
  int missing_permanent = 0, three_elected = 0;
  for (Coalition l : ml) {
    if (cardinality(l & full_set(5)) == 4 && cardinality(l >> 5) == 10) {
      ++missing_permanent;
    }
    if ((l & full_set(5)) == full_set(5) && cardinality(l >> 5) == 3) {
      ++three_elected;
    }
  }
  EXPECT_EQ(missing_permanent, 5);
  EXPECT_EQ(three_elected, 120);
  EXPECT_EQ(ml.size(), 125u);
}

TEST(SimpleGame, MaximalLosingAboveTheDenseLimit) {
  // Above 20 players the transversal computation runs instead.
  const std::pair<int, size_t> cases[] = {{1, 1}, {2, 21}, {20, 210}, {21, 21}};
  for (const auto& [k, count] : cases) {
    const auto ml = maximal_losing(make_k_out_of_n(21, k));
    EXPECT_EQ(ml.size(), count) << k;
    for (Coalition l : ml) EXPECT_EQ(cardinality(l), k - 1);
  }
}

TEST(SimpleGame, SpecialPlayers) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(vetoers(make_unanimity(n)), full_set(n));
    EXPECT_EQ(passers(make_unanimity(n)), Coalition{0});
    EXPECT_EQ(dummies(make_unanimity(n)), Coalition{0});
    EXPECT_EQ(passers(make_anti_unanimity(n)), full_set(n));
    EXPECT_EQ(vetoers(make_anti_unanimity(n)), Coalition{0});
  }
  const SimpleGame oligarchy(3, {0b011});
  EXPECT_EQ(dummies(oligarchy), Coalition{0b100});
  EXPECT_EQ(vetoers(oligarchy), Coalition{0b011});
}

TEST(SimpleGame, TrivialFull) {
  EXPECT_TRUE(is_trivial_full(SimpleGame(2, {0})));
  EXPECT_FALSE(is_trivial_full(make_unanimity(2)));
}

TEST(SimpleGame, RestrictionsMatchDefinitions) {
  for (const auto& g : enumerate_games(4)) {
    for (Coalition a = 0; a <= g.players(); ++a) {
      const Coalition rest = g.players() & ~a;
      std::vector<int> members = members_of(rest);
      for (bool reduced : {false, true}) {
        Restriction r = reduced ? reduced_game(g, a) : subgame(g, a);
        bool any = false;
        for (Coalition x = 0; x <= rest; ++x) {
          if ((x & ~rest) != 0) continue;
          any |= oracle::wins(g, reduced ? x | a : x);
        }
        ASSERT_EQ(r.degenerate(), members.empty() || !any) << g.to_string();
        if (r.degenerate()) continue;
        EXPECT_EQ(r.player_map, members);
        for (Coalition y = 0; y <= r.game->players(); ++y) {
          Coalition x = 0;
          for (int k : members_of(y)) x |= bit(members[k]);
          EXPECT_EQ(is_winning(*r.game, y), oracle::wins(g, reduced ? x | a : x));
        }
      }
    }
  }
}

TEST(SimpleGame, CouncilRestrictions) {
  const SimpleGame unsc = make_unsc();
  Restriction r = reduced_game(unsc, full_set(5));
  ASSERT_FALSE(r.degenerate());
  EXPECT_EQ(*r.game, make_k_out_of_n(10, 4));
  EXPECT_EQ(*subgame(unsc, 0).game, unsc);
  EXPECT_EQ(*reduced_game(unsc, 0).game, unsc);
  EXPECT_TRUE(subgame(make_unanimity(2), 1).degenerate());
}

TEST(SimpleGame, PermuteRelabels) {
  const SimpleGame g(3, {0b011, 0b100});
  const SimpleGame p = permute(g, {2, 0, 1});
  EXPECT_EQ(p.min_winning(), (std::vector<Coalition>{0b010, 0b101}));
  EXPECT_EQ(map_coalition(0b011, {2, 0, 1}), Coalition{0b101});
}

}  // namespace
}  // namespace sgames
