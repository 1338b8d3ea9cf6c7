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


#ifndef SGAMES_CANONICAL_H_
#define SGAMES_CANONICAL_H_

#include <optional>
#include <string>
#include <vector>

#include "sgames/catalog.h"
#include "sgames/game.h"

namespace sgames {

// heads[0] o heads[1] o ... o core o A_tail. Heads are refined H games
// (A2, U2, H_{n,k} with 1 < k < n), stored with family H; U_m and A_m
// heads appear as runs of m-1 copies of U2 or A2. The tail is only used
// after a B2 core. The empty form denotes the one-player game.
struct CanonicalForm {
  std::vector<CatalogParams> heads;
  std::optional<CatalogParams> core;
  std::optional<int> tail;

  bool operator==(const CanonicalForm&) const = default;
};

std::string to_string(const CanonicalForm& form);

// Empty when the form is well shaped, else the violated invariant.
std::optional<std::string> form_violation(const CanonicalForm& form);

// Left-to-right composition, each step over the highest-index player among
// the least desirable non-dummy players of the game built so far. Throws
// ConstraintViolation on a malformed form.
SimpleGame build_from_canonical(const CanonicalForm& form);

struct CanonicalOutcome {
  std::optional<CanonicalForm> form;
  // "not complete", "not weighted" or "terminal not in catalog" when the
  // form is absent.
  std::string reason;
};

// Peels vetoers (U2 heads), passers (A2 heads) and proper H heads, then
// classifies the terminal game as a core or a B2 core with an A_n tail.
// Throws DummiesPresent.
CanonicalOutcome canonical_analysis(const SimpleGame& game);
std::optional<CanonicalForm> canonical_decompose(const SimpleGame& game);
bool recognize_ideal_weighted(const SimpleGame& game);

// Every canonical form reachable by any sequence of head peels and
// terminal splits found by find_decompositions, deduplicated.
std::vector<CanonicalForm> all_canonical_paths(const SimpleGame& game);

// All decomposition paths agree with canonical_decompose. Throws
// PreconditionViolation when the game is not recognized.
bool verify_uniqueness(const SimpleGame& game);

}  // namespace sgames

#endif  // SGAMES_CANONICAL_H_
