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


#include "sgames/paper_certificates.h"

#include <gtest/gtest.h>

#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/errors.h"
#include "sgames/weights.h"

namespace sgames {
namespace {

TEST(PaperCertificates, CaseNamesRoundTrip) {
  for (CaseId id : all_cases()) EXPECT_EQ(parse_case(case_name(id)), id);
  EXPECT_EQ(all_cases().size(), 12u);
  EXPECT_THROW(parse_case("nope"), InvalidInput);
}

TEST(PaperCertificates, ExpandDisplayIsBalanced) {
  // ({1,2^2},{1,2,3}; {2^3,3},{1^2}) over levels of sizes 2, 3, 1.
  const Display d{{{1, 2, 0}, {1, 1, 1}}, {{0, 3, 1}, {2, 0, 0}}};
  const TradingTransform t = expand_display(d, {{0, 1}, {2, 3, 4}, {5}});
  EXPECT_TRUE(is_trading_transform(t));
  EXPECT_EQ(t.x[0], make_coalition({0, 2, 3}));
  EXPECT_THROW(expand_display({{{0, 4, 0}}, {{0, 4, 0}}}, {{0, 1}, {2, 3, 4}, {5}}),
               UnrealizableDisplay);
  EXPECT_THROW(expand_display({{{-1, 0, 0}}, {{-1, 0, 0}}}, {{0, 1}, {2, 3, 4}, {5}}),
               UndefinedDisplay);
}

TEST(PaperCertificates, LiftThroughInnerGame) {
  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  const SimpleGame inner = make_k_out_of_n(2, 2);
  const int pivot = 4;
  const TradingTransform t =
      keylemma_lift(b2, pivot, make_coalition({0, 1}), make_coalition({2, 3}),
                    make_coalition({0, 2}), make_coalition({1, 3}), inner, 0b11);
  const SimpleGame c = compose(b2, pivot, inner);
  EXPECT_TRUE(check_certificate(c, t, CertificateKind::kNonweightedness).valid)
      << to_string(t);

  // The second coalition already wins: the seed comes back unchanged.
  const SimpleGame swap(5, {0b00011, 0b01100});
  const TradingTransform same =
      keylemma_lift(swap, 4, make_coalition({0, 1}), make_coalition({2, 3}),
                    make_coalition({0, 2}), make_coalition({1, 3}), inner, 0b11);
  EXPECT_EQ(same, (TradingTransform{{0b0011, 0b1100}, {0b0101, 0b1010}}));

  EXPECT_THROW(keylemma_lift(b2, pivot, make_coalition({0, 1}),
                             make_coalition({2, 3}), make_coalition({0, 2}),
                             make_coalition({1, 3}), inner, 0b01),
               PreconditionViolation);
}

TEST(PaperCertificates, NotCompleteCertificates) {
  const SimpleGame b2 = make_type(Family::kB2, {2, 3}, {2, 3});
  const SimpleGame inner = make_k_out_of_n(3, 2);
  const SimpleGame c = compose(b2, 1, inner);
  for (Branch b : {Branch::kAny, Branch::kPivotInY, Branch::kPivotNotInY}) {
    const TradingTransform t = not_complete_certificate(b2, 1, inner, b);
    EXPECT_TRUE(is_certificate_of_incompleteness(c, t)) << to_string(t);
  }
  EXPECT_THROW(not_complete_certificate(b2, 1, make_anti_unanimity(2)),
               InapplicableCase);
}

TEST(PaperCertificates, GeneralCasesValidate) {
  const CatalogParams b2{Family::kB2, {2, 3}, {2, 3}};
  const PaperCertificate un =
      certificate_for(CaseId::kUn, {b2, 1, make_unanimity(2)});
  EXPECT_TRUE(validate(un).valid);
  EXPECT_FALSE(is_weighted(un.composite));
  const PaperCertificate x =
      certificate_for(CaseId::kX1X2An, {b2, 1, make_anti_unanimity(2)});
  EXPECT_TRUE(validate(x).valid);
  EXPECT_THROW(certificate_for(CaseId::kUn, {{Family::kH, {4}, {2}}, 1,
                                             make_unanimity(2)}),
               InapplicableCase);
}

TEST(PaperCertificates, LevelTwoCasesValidate) {
  const struct {
    CaseId id;
    Family family;
    int level;
  } cases[] = {{CaseId::kB2Level2, Family::kB2, 2},
               {CaseId::kB3Level2, Family::kB3, 2},
               {CaseId::kT1Level3, Family::kT1, 3},
               {CaseId::kT3Level3, Family::kT3, 3}};
  for (const auto& c : cases) {
    int built = 0;
    for (const auto& p : catalog_grid(c.family, Mode::kIndecomposable, 4, 6, 8)) {
      for (const SimpleGame& inner :
           {make_unanimity(2), make_k_out_of_n(3, 2)}) {
        try {
          const PaperCertificate cert = certificate_for(c.id, {p, c.level, inner});
          ++built;
          EXPECT_TRUE(validate(cert).valid) << case_name(c.id) << to_string(p);
        } catch (const InapplicableCase&) {
        } catch (const PreconditionViolation&) {
        }
      }
    }
    EXPECT_GT(built, 0) << case_name(c.id);
  }
}

// The smallest B1 point composed with A2 below its second level is not
// weighted, and a two-coalition certificate exists, but the displayed
// transform needs three second-level players where only two remain.
TEST(PaperCertificates, B1WithAntiUnanimity) {
  const CatalogParams p{Family::kB1, {2, 3}, {1, 3}};
  const SimpleGame c = compose(make(p), 4, make_anti_unanimity(2));
  EXPECT_FALSE(is_weighted(c));
  const auto t = search_certificate(c, 2);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(check_certificate(c, *t, CertificateKind::kNonweightedness).valid);
  EXPECT_THROW(certificate_for(CaseId::kB1An, {p, 2, make_anti_unanimity(2)}),
               UnrealizableDisplay);
}

// B3 at the same position: the composite is weighted, so no certificate
// can exist, and the display is likewise unrealizable.
TEST(PaperCertificates, B3WithAntiUnanimity) {
  const CatalogParams p{Family::kB3, {3, 3}, {3, 4}};
  EXPECT_TRUE(is_weighted(compose(make(p), 5, make_anti_unanimity(2))));
  EXPECT_THROW(certificate_for(CaseId::kB3An, {p, 2, make_anti_unanimity(2)}),
               UnrealizableDisplay);
}

}  // namespace
}  // namespace sgames
