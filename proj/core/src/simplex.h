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

#ifndef SGAMES_SRC_SIMPLEX_H_
#define SGAMES_SRC_SIMPLEX_H_

#include <vector>

#include "sgames/rational.h"

namespace sgames::internal {

// Outcome of phase 1 on {A x = b, x >= 0} with b >= 0.
struct PhaseOneResult {
  bool feasible = false;
  // A basic feasible point when feasible.
  std::vector<Rational> x;
  // When infeasible: row multipliers y with y^T A <= 0 and y^T b > 0.
  std::vector<Rational> ray;
};

// Exact dense tableau simplex with Bland's rule; one artificial variable
// per row. `a` is row-major, rows x cols.
PhaseOneResult phase_one(const std::vector<std::vector<Rational>>& a,
                         const std::vector<Rational>& b);

}  // namespace sgames::internal

#endif  // SGAMES_SRC_SIMPLEX_H_
