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


#include "sgames/canonical.h"

#include <gtest/gtest.h>

#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/errors.h"
#include "sgames/isomorphism.h"
#include "sgames/suites.h"
#include "sgames/weights.h"

namespace sgames {
namespace {

const CatalogParams kU2{Family::kH, {2}, {2}};
const CatalogParams kA2{Family::kH, {2}, {1}};

CatalogParams h(int n, int k) { return {Family::kH, {n}, {k}}; }

TEST(Canonical, CouncilForm) {
  CanonicalForm form;
  form.heads.assign(5, kU2);
  form.heads.push_back(h(10, 4));
  EXPECT_FALSE(form_violation(form).has_value());
  EXPECT_TRUE(isomorphic(build_from_canonical(form), make_unsc()));
  const auto got = canonical_decompose(make_unsc());
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(*got, form);
  EXPECT_TRUE(verify_uniqueness(make_unsc()));
}

TEST(Canonical, B2CoreWithTail) {
  const CatalogParams b2{Family::kB2, {2, 3}, {2, 3}};
  const SimpleGame built = build_from_canonical({{}, b2, 2});
  EXPECT_TRUE(is_weighted(built));

  const SimpleGame c = compose(make(b2), 4, make_anti_unanimity(3));
  const auto form = canonical_decompose(c);
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(*form, (CanonicalForm{{}, b2, 3}));
  EXPECT_TRUE(isomorphic(build_from_canonical(*form), c));
}

TEST(Canonical, CoreOnly) {
  for (const auto& p : catalog_grid(Family::kT3, Mode::kIndecomposable, 3, 6, 8)) {
    const SimpleGame g = make(p);
    EXPECT_EQ(build_from_canonical({{}, p, std::nullopt}), g);
    const auto form = canonical_decompose(g);
    ASSERT_TRUE(form.has_value());
    EXPECT_EQ(*form, (CanonicalForm{{}, p, std::nullopt}));
    EXPECT_TRUE(verify_uniqueness(g));
  }
}

TEST(Canonical, EveryRefinedCatalogGameIsRecognized) {
  for (Family f : {Family::kH, Family::kB1, Family::kB2, Family::kB3,
                   Family::kT1, Family::kT3}) {
    for (const auto& p : catalog_grid(f, Mode::kIndecomposable, 4, 6, 8)) {
      EXPECT_TRUE(recognize_ideal_weighted(make(p))) << to_string(p);
    }
  }
}

TEST(Canonical, ProductsOfKOutOfN) {
  const SimpleGame outer = make_k_out_of_n(4, 2);
  for (int pivot = 0; pivot < 4; ++pivot) {
    const SimpleGame g = compose(outer, pivot, make_k_out_of_n(3, 2));
    const auto form = canonical_decompose(g);
    ASSERT_TRUE(form.has_value());
    EXPECT_EQ(form->heads, (std::vector<CatalogParams>{h(4, 2), h(3, 2)}));
    EXPECT_FALSE(form->core.has_value());
    EXPECT_TRUE(is_weighted(g));
  }
}

TEST(Canonical, UnanimityChain) {
  const auto form = canonical_decompose(make_unanimity(3));
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(form->heads, (std::vector<CatalogParams>{kU2, kU2}));
  EXPECT_EQ(all_canonical_paths(make_unanimity(3)).size(), 1u);
  EXPECT_TRUE(verify_uniqueness(make_anti_unanimity(4)));
}

TEST(Canonical, Rejections) {
  const SimpleGame b1 = make_type(Family::kB1, {2, 3}, {1, 3});
  const CanonicalOutcome nw =
      canonical_analysis(compose(b1, 4, make_anti_unanimity(2)));
  EXPECT_FALSE(nw.form.has_value());
  EXPECT_EQ(nw.reason, "not weighted");

  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  const CanonicalOutcome nc =
      canonical_analysis(compose(b2, 1, make_anti_unanimity(2)));
  EXPECT_FALSE(nc.form.has_value());
  EXPECT_EQ(nc.reason, "not complete");
  EXPECT_FALSE(recognize_ideal_weighted(compose(b2, 1, make_anti_unanimity(2))));

  EXPECT_THROW(canonical_analysis(SimpleGame(3, {0b011})), DummiesPresent);
  EXPECT_THROW(verify_uniqueness(SimpleGame(4, {0b0011, 0b1100})),
               PreconditionViolation);
}

TEST(Canonical, SeparatesTailFromKOutOfNHead) {
  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  const auto tail = canonical_decompose(compose(b2, 4, make_anti_unanimity(3)));
  const auto head = canonical_decompose(
      compose(make_k_out_of_n(4, 2), 3, make_anti_unanimity(3)));
  ASSERT_TRUE(tail.has_value());
  ASSERT_TRUE(head.has_value());
  EXPECT_NE(*tail, *head);
  EXPECT_EQ(head->heads.front(), h(4, 2));
}

TEST(Canonical, FormViolations) {
  EXPECT_TRUE(form_violation({{h(3, 3)}, std::nullopt, std::nullopt}));
  EXPECT_TRUE(form_violation({{}, h(4, 2), std::nullopt}));
  EXPECT_TRUE(form_violation({{}, std::nullopt, 2}));
  EXPECT_TRUE(form_violation(
      {{}, CatalogParams{Family::kB3, {3, 3}, {3, 4}}, 2}));
  EXPECT_TRUE(form_violation(
      {{}, CatalogParams{Family::kB2, {2, 3}, {2, 3}}, 1}));
  EXPECT_THROW(build_from_canonical({{h(3, 3)}, std::nullopt, std::nullopt}),
               ConstraintViolation);
  EXPECT_FALSE(to_string(CanonicalForm{{kU2}, std::nullopt, std::nullopt})
                   .empty());
}

}  // namespace
}  // namespace sgames
