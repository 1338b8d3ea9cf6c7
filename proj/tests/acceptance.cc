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


// Acceptance runner: one line per criterion, exit status 1 on any failure.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgames/suites.h"

namespace {

using sgames::CheckOutcome;
using sgames::SuiteOptions;

struct Criterion {
  int id;
  const char* title;
  std::function<CheckOutcome(const SuiteOptions&)> run;
  double time_limit;  // seconds; 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "weighted iff no trading certificate, n <= 4", sgames::check_elgot,
       60},
      {2, "completeness iff no swap certificate, n <= 4",
       sgames::check_completeness, 0},
      {3, "security council weights and structure", sgames::check_unsc, 0},
      {4, "composition laws on random triples",
       sgames::check_composition_laws, 0},
      {5, "weighted compositions and their components",
       sgames::check_weighted_compositions, 0},
      {6, "desirability across composition",
       sgames::check_desirability_transfer, 0},
      {7, "k-out-of-n indecomposability and heads", sgames::check_k_out_of_n,
       0},
      {8, "catalog grid and decomposable families", sgames::check_catalog, 0},
      {9, "weighted composites and certificate replay",
       sgames::check_when_weighted, 300},
      {10, "canonical forms: round trip, uniqueness, separation",
       sgames::check_canonical_forms, 0},
      {11, "tripartite condition sweeps and certificate replay",
       sgames::check_appendix, 0},
  };

  SuiteOptions opt;
  int failures = 0;
  for (const auto& c : criteria) {
    CheckOutcome r = c.run(opt);
    const bool slow = c.time_limit > 0 && r.seconds > c.time_limit;
    const bool pass = r.passed() && !slow;
    failures += !pass;
    std::printf("[%s] %2d %s: %ld checks, %ld failed, %.2f s\n",
                pass ? "PASS" : "FAIL", c.id, c.title, r.checked, r.failed,
                r.seconds);
    if (slow) std::printf("       over the %.0f s limit\n", c.time_limit);
    if (!pass) {
      for (const auto& e : r.examples) std::printf("       %s\n", e.c_str());
    }
    for (const auto& n : r.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
