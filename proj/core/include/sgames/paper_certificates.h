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


#ifndef SGAMES_PAPER_CERTIFICATES_H_
#define SGAMES_PAPER_CERTIFICATES_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/catalog.h"
#include "sgames/errors.h"
#include "sgames/game.h"
#include "sgames/profile.h"
#include "sgames/trading.h"

namespace sgames {

// A display needs more players of a level than the composite offers.
class UnrealizableDisplay : public Error {
 public:
  using Error::Error;
};

// A display exponent is negative at the requested parameters.
class UndefinedDisplay : public Error {
 public:
  using Error::Error;
};

// The case does not apply to the requested family, level or inner game.
class InapplicableCase : public Error {
 public:
  using Error::Error;
};

enum class CaseId {
  kB1Level2,
  kB2Level2,
  kB3Level2,
  kT1Level3,
  kT3Level3,
  kB1An,
  kB3An,
  kT1An,
  kT3An,
  kNotComplete,
  kX1X2An,
  kUn,
};

std::string case_name(CaseId id);
CaseId parse_case(const std::string& name);
std::vector<CaseId> all_cases();

// Profile-notation transform: per-level counts for each coalition.
struct Display {
  std::vector<Profile> x;
  std::vector<Profile> y;
};

// Expands a display over pools of players, one pool per level. Each side
// walks every pool cyclically from its first player, so per-level balance
// of the display gives per-player balance of the result. Throws
// UndefinedDisplay or UnrealizableDisplay.
TradingTransform expand_display(const Display& d,
                                const std::vector<std::vector<int>>& pools);

// Lifts a two-coalition transform of outer, where x1 wins, x2 wins with the
// pivot and y1, y2 lose, to compose(outer, pivot, inner): (x1, x2+u;
// y1+u1, y2+u2) with u1 the lowest member of u. Returns the lifted seed
// unchanged when x2 already wins. Coalitions are in outer indexing; the
// result is in the composite layout. Throws PreconditionViolation naming
// the failed condition.
TradingTransform keylemma_lift(const SimpleGame& outer, int pivot,
                               Coalition x1, Coalition x2, Coalition y1,
                               Coalition y2, const SimpleGame& inner,
                               Coalition u);

enum class Branch { kAny, kPivotInY, kPivotNotInY };

// Incompleteness certificate for compose(outer, pivot, inner) when some
// non-dummy player is strictly less desirable than the pivot and inner is
// neither an oligarchy nor an anti-oligarchy.
TradingTransform not_complete_certificate(const SimpleGame& outer, int pivot,
                                          const SimpleGame& inner,
                                          Branch branch = Branch::kAny);

struct CaseInput {
  CatalogParams outer;
  // 1-based level of the outer game holding the pivot; 0 picks the case's
  // natural level (the least desirable one, or level 1).
  int pivot_level = 0;
  SimpleGame inner;
  Branch branch = Branch::kAny;
};

struct PaperCertificate {
  CaseId id;
  SimpleGame outer;
  int pivot;
  SimpleGame inner;
  SimpleGame composite;
  TradingTransform transform;
  CertificateKind kind;
};

// The pivot is the last player of its level. Throws InapplicableCase,
// UndefinedDisplay, UnrealizableDisplay or PreconditionViolation.
PaperCertificate certificate_for(CaseId id, const CaseInput& input);

CertificateCheck validate(const PaperCertificate& cert);

}  // namespace sgames

#endif  // SGAMES_PAPER_CERTIFICATES_H_
