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


#ifndef SGAMES_CATALOG_H_
#define SGAMES_CATALOG_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/game.h"

namespace sgames {

enum class Family {
  kH,
  kU,
  kA,
  kHierDisj,
  kHierConj,
  kDelta1,
  kDelta2,
  kB1,
  kB2,
  kB3,
  kT1,
  kT2,
  kT3,
};

std::string family_name(Family f);
// Accepts the names family_name produces. Throws InvalidInput.
Family parse_family(const std::string& name);

// Level sizes n and thresholds k. One-level families use n = (n), k = (k);
// U and A ignore k.
struct CatalogParams {
  Family family = Family::kH;
  std::vector<int> n;
  std::vector<int> k;

  bool operator==(const CatalogParams&) const = default;
};

std::string to_string(const CatalogParams& p);

// Full admits every type of the unrefined list; Indecomposable enforces the
// refined H and B1 conditions and rejects T2.
enum class Mode { kFull, kIndecomposable };

SimpleGame make_k_out_of_n(int n, int k);
SimpleGame make_unanimity(int n);
SimpleGame make_anti_unanimity(int n);

// Two-level games; level 1 holds players 0..n1-1.
SimpleGame make_hier_disjunctive(const std::vector<int>& n,
                                 const std::vector<int>& k);
SimpleGame make_hier_conjunctive(const std::vector<int>& n,
                                 const std::vector<int>& k);

// Three-level games. Constraint failures raise ConstraintViolation naming
// the failed condition.
SimpleGame make_delta1(const std::vector<int>& n, const std::vector<int>& k);
SimpleGame make_delta2(const std::vector<int>& n, const std::vector<int>& k);

// The defining predicates expanded without any parameter checks. Empty when
// no profile wins.
std::optional<SimpleGame> expand_delta1(const std::vector<int>& n,
                                        const std::vector<int>& k);
std::optional<SimpleGame> expand_delta2(const std::vector<int>& n,
                                        const std::vector<int>& k);

// Whether "the parameter conditions hold" agrees with "the raw expansion is
// tripartite without dummies". The delta2 form requires n2 <= k2 - k1 and
// throws PreconditionViolation otherwise.
bool delta1_conditions_iff_tripartite(const std::vector<int>& n,
                                      const std::vector<int>& k);
bool delta2_conditions_iff_tripartite(const std::vector<int>& n,
                                      const std::vector<int>& k);

// Name of the first violated condition for the family, or empty.
std::optional<std::string> violated_constraint(const CatalogParams& p,
                                               Mode mode = Mode::kFull);

// Any family. Throws ConstraintViolation.
SimpleGame make(const CatalogParams& p, Mode mode = Mode::kFull);
SimpleGame make_type(Family family, const std::vector<int>& n,
                     const std::vector<int>& k, Mode mode = Mode::kFull);

// Refined membership: H (A2, U2, H_{n,k} with 1 < k < n), B1, B2, B3, T1,
// T3. Parameters are solved from the shift-minimal profiles and the
// reconstruction compared. Empty means not in the catalog.
using CatalogTag = std::optional<CatalogParams>;
CatalogTag classify(const SimpleGame& game);

// Valid parameter points with every level size <= max_level, every
// threshold <= max_k and at most max_total players.
std::vector<CatalogParams> catalog_grid(Family family, Mode mode,
                                        int max_level = 4, int max_k = 6,
                                        int max_total = 10);

}  // namespace sgames

#endif  // SGAMES_CATALOG_H_
