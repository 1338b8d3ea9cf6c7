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


#include "sgames/catalog.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sgames/composition.h"
#include "sgames/desirability.h"
#include "sgames/errors.h"
#include "sgames/isomorphism.h"
#include "sgames/profile.h"
#include "sgames/suites.h"

namespace sgames {
namespace {

const Family kRefined[] = {Family::kH,  Family::kB1, Family::kB2,
                           Family::kB3, Family::kT1, Family::kT3};

TEST(Catalog, OneLevelGames) {
  EXPECT_EQ(make_k_out_of_n(3, 2).min_winning(),
            (std::vector<Coalition>{0b011, 0b101, 0b110}));
  EXPECT_EQ(make_unanimity(1).min_winning(), (std::vector<Coalition>{1}));
  EXPECT_EQ(make_anti_unanimity(4).min_winning().size(), 4u);
  EXPECT_THROW(make_k_out_of_n(3, 4), ConstraintViolation);
}

TEST(Catalog, TwoLevelGames) {
  const SimpleGame disj = make_hier_disjunctive({2, 3}, {2, 3});
  EXPECT_EQ(to_profile(disj).shift_min, (std::vector<Profile>{{2, 0}, {0, 3}}));
  EXPECT_EQ(make_hier_conjunctive({5, 10}, {5, 9}), make_unsc());
  EXPECT_THROW(make_hier_disjunctive({2, 3}, {2, 5}), ConstraintViolation);
  EXPECT_EQ(to_profile(make_type(Family::kB3, {3, 3}, {3, 4})).shift_min,
            (std::vector<Profile>{{3, 0}, {1, 3}}));
  EXPECT_EQ(to_profile(make_type(Family::kB2, {3, 4}, {3, 4})).shift_min,
            (std::vector<Profile>{{3, 0}, {0, 4}}));
}

TEST(Catalog, ThreeLevelGames) {
  const SimpleGame d = make_delta1({2, 2, 3}, {2, 3, 5});
  EXPECT_EQ(desirability_levels(d).size(), 3u);
  EXPECT_EQ(dummies(d), Coalition{0});
  EXPECT_EQ(to_profile(d).shift_min,
            (std::vector<Profile>{{2, 0, 0}, {1, 2, 2}}));
  EXPECT_THROW(make_delta1({2, 2, 2}, {2, 3, 5}), ConstraintViolation);
  EXPECT_THROW(make_delta2({2, 3, 3}, {2, 3, 6}), ConstraintViolation);
}

TEST(Catalog, ConditionSweeps) {
  EXPECT_TRUE(delta1_conditions_iff_tripartite({2, 2, 3}, {2, 3, 5}));
  EXPECT_TRUE(delta1_conditions_iff_tripartite({2, 2, 3}, {2, 5, 5}));
  EXPECT_TRUE(delta2_conditions_iff_tripartite({2, 1, 1}, {1, 3, 5}));
  EXPECT_THROW(delta2_conditions_iff_tripartite({2, 3, 3}, {2, 3, 6}),
               PreconditionViolation);
}

TEST(Catalog, RefinedModeRejects) {
  EXPECT_THROW(make_type(Family::kT2, {2, 1, 3}, {2, 1, 3},
                         Mode::kIndecomposable),
               ConstraintViolation);
  EXPECT_THROW(
      make(CatalogParams{Family::kH, {3}, {3}}, Mode::kIndecomposable),
      ConstraintViolation);
  int narrow = 0;
  for (const auto& p : catalog_grid(Family::kB1, Mode::kFull)) {
    if (p.n[1] != 2) continue;
    ++narrow;
    EXPECT_TRUE(violated_constraint(p, Mode::kIndecomposable).has_value());
    EXPECT_THROW(make(p, Mode::kIndecomposable), ConstraintViolation);
    EXPECT_FALSE(is_indecomposable(make(p)));
  }
  EXPECT_GT(narrow, 0);
}

TEST(Catalog, RefinedGridIsIndecomposableWeightedAndClassified) {
  for (Family f : kRefined) {
    const auto grid = catalog_grid(f, Mode::kIndecomposable, 4, 6, 9);
    EXPECT_FALSE(grid.empty()) << family_name(f);
    for (const auto& p : grid) {
      const SimpleGame g = make(p, Mode::kIndecomposable);
      EXPECT_TRUE(is_indecomposable(g)) << to_string(p);
      EXPECT_TRUE(oracle::complete(g));
      const CatalogTag tag = classify(g);
      ASSERT_TRUE(tag.has_value()) << to_string(p);
      EXPECT_EQ(make(*tag), g) << to_string(p);
    }
  }
}

TEST(Catalog, Classify) {
  const auto h = classify(make_k_out_of_n(7, 3));
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (CatalogParams{Family::kH, {7}, {3}}));
  const auto b2 = classify(make_type(Family::kB2, {2, 3}, {2, 3}));
  ASSERT_TRUE(b2.has_value());
  EXPECT_EQ(*b2, (CatalogParams{Family::kB2, {2, 3}, {2, 3}}));
  EXPECT_FALSE(classify(make_unsc()).has_value());
  EXPECT_FALSE(classify(make_unanimity(3)).has_value());
  EXPECT_FALSE(classify(SimpleGame(4, {0b0011, 0b1100})).has_value());
}

TEST(Catalog, NamesRoundTrip) {
  for (Family f : {Family::kH, Family::kU, Family::kA, Family::kHierDisj,
                   Family::kHierConj, Family::kDelta1, Family::kDelta2,
                   Family::kB1, Family::kB2, Family::kB3, Family::kT1,
                   Family::kT2, Family::kT3}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_THROW(parse_family("B9"), InvalidInput);
}

// Every T2 point on the grid turns out to be indecomposable; the factor
// through an H game at the second level does not recompose to it.
TEST(Catalog, TwoLevelFactorOfT2DoesNotExist) {
  const auto grid = catalog_grid(Family::kT2, Mode::kFull);
  ASSERT_FALSE(grid.empty());
  for (const auto& p : grid) {
    EXPECT_TRUE(is_indecomposable(make(p))) << to_string(p);
  }
}

TEST(Catalog, NarrowB1FactorsThroughAntiUnanimity) {
  for (const auto& p : catalog_grid(Family::kB1, Mode::kFull)) {
    if (p.n[1] != 2) continue;
    const SimpleGame outer = make_k_out_of_n(p.n[0] + 1, p.k[0] + 1);
    const SimpleGame c = compose(outer, p.n[0], make_anti_unanimity(2));
    EXPECT_TRUE(isomorphic(c, make(p)).has_value()) << to_string(p);
  }
}

}  // namespace
}  // namespace sgames
