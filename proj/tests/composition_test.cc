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


#include "sgames/composition.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sgames/catalog.h"
#include "sgames/enumerate.h"
#include "sgames/errors.h"
#include "sgames/isomorphism.h"
#include "sgames/suites.h"

namespace sgames {
namespace {

TEST(Composition, FormulaMatchesDefinition) {
  std::vector<SimpleGame> small;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : enumerate_games(n)) small.push_back(g);
  }
  for (const auto& outer : small) {
    for (const auto& inner : small) {
      for (int p = 0; p < outer.n(); ++p) {
        EXPECT_EQ(compose(outer, p, inner),
                  oracle::compose_by_definition(outer, p, inner))
            << outer.to_string() << " " << p << " " << inner.to_string();
      }
    }
  }
}

TEST(Composition, UnanimityAndAntiUnanimityChains) {
  EXPECT_EQ(compose(make_unanimity(2), 1, make_unanimity(2)),
            make_unanimity(3));
  EXPECT_EQ(compose(make_anti_unanimity(2), 0, make_anti_unanimity(2)),
            make_anti_unanimity(3));
  EXPECT_TRUE(isomorphic(compose(make_unanimity(2), 0, make_unanimity(2)),
                         make_unanimity(3)));
}

TEST(Composition, SinglePlayerFactors) {
  const SimpleGame one(1, {1});
  const SimpleGame h = make_k_out_of_n(4, 2);
  EXPECT_EQ(compose(one, 0, h), h);
  EXPECT_TRUE(isomorphic(compose(h, 2, one), h));
}

TEST(Composition, LayoutAndSizes) {
  CompositionSpec spec{make_k_out_of_n(3, 2), 1, make_unanimity(2), {}};
  EXPECT_EQ(composite_size(spec), 4);
  EXPECT_EQ(embed_outer(0b101, 1), Coalition{0b11});
  EXPECT_EQ(embed_inner(0b11, 3), Coalition{0b1100});
}

TEST(Composition, GWinning) {
  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  EXPECT_TRUE(g_winning(b2, 4, make_coalition({2, 3})));
  EXPECT_TRUE(g_winning(b2, 4, make_coalition({0, 1})));
  EXPECT_FALSE(g_winning(b2, 4, make_coalition({2})));
  EXPECT_FALSE(g_winning(make_unanimity(2), 0, 0));
  EXPECT_THROW(g_winning(b2, 2, make_coalition({2, 3})), InvalidInput);
}

TEST(Composition, DecompositionsRoundTrip) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& g : enumerate_games(n)) {
      for (const auto& d : find_decompositions(g)) {
        EXPECT_GE(d.outer.n(), 2);
        EXPECT_GE(d.inner.n(), 2);
        EXPECT_EQ(compose(d), g) << g.to_string();
      }
    }
  }
}

TEST(Composition, KnownDecompositions) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      EXPECT_TRUE(is_indecomposable(make_k_out_of_n(n, k))) << n << k;
    }
  }
  EXPECT_TRUE(is_indecomposable(make_unanimity(2)));
  EXPECT_TRUE(is_indecomposable(make_anti_unanimity(2)));

  const auto u3 = find_decompositions(make_unanimity(3));
  EXPECT_EQ(u3.size(), 3u);
  for (const auto& d : u3) EXPECT_EQ(d.inner, make_unanimity(2));

  bool council = false;
  for (const auto& d : find_decompositions(make_unsc())) {
    council |= d.inner == make_k_out_of_n(10, 4) && d.outer == make_unanimity(6);
  }
  EXPECT_TRUE(council);
}

TEST(Composition, StripVetoersAndPassers) {
  const auto v = strip_vetoers(make_unsc());
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->m, 5);
  ASSERT_FALSE(v->residual.degenerate());
  EXPECT_EQ(*v->residual.game, make_k_out_of_n(10, 4));
  const auto p = strip_passers(make_anti_unanimity(3));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->m, 3);
  EXPECT_TRUE(p->residual.degenerate());
  EXPECT_FALSE(strip_vetoers(make_k_out_of_n(3, 2)).has_value());
  EXPECT_FALSE(strip_passers(make_k_out_of_n(3, 2)).has_value());
}

}  // namespace
}  // namespace sgames
