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


#ifndef SGAMES_SUITES_H_
#define SGAMES_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sgames/game.h"

namespace sgames {

struct SuiteOptions {
  int n = 4;           // largest enumerated player count
  bool allow_five = false;
  std::uint64_t seed = 1;
  int triples = 120;   // random triples for the composition laws
  int max_examples = 8;
};

// One property replayed over a population. Failures keep the first
// max_examples descriptions, each naming the offending games.
struct CheckOutcome {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> examples;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failed == 0; }
};

struct CensusRecord {
  std::string id;         // n and minimal winning family
  std::string iso_class;  // canonical relabelling key
  int n = 0;
  bool trivial_full = false;
  bool complete = false;
  bool weighted = false;
  bool indecomposable = false;
  bool dummies = false;
  std::string catalog;    // empty when not in the catalog
  bool recognized = false;
  std::string canonical;  // form, or the reason it is absent
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;
  std::vector<CensusRecord> census;

  bool passed() const;
};

CheckOutcome check_elgot(const SuiteOptions& opt);
CheckOutcome check_unsc(const SuiteOptions& opt);
CheckOutcome check_completeness(const SuiteOptions& opt);
CheckOutcome check_composition_laws(const SuiteOptions& opt);
CheckOutcome check_weighted_compositions(const SuiteOptions& opt);
CheckOutcome check_desirability_transfer(const SuiteOptions& opt);
CheckOutcome check_k_out_of_n(const SuiteOptions& opt);
CheckOutcome check_catalog(const SuiteOptions& opt);
CheckOutcome check_when_weighted(const SuiteOptions& opt);
CheckOutcome check_canonical_forms(const SuiteOptions& opt);
CheckOutcome check_appendix(const SuiteOptions& opt);

std::vector<std::string> suite_names();
// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

CensusRecord census_record(const SimpleGame& game);
std::vector<CensusRecord> census(const SuiteOptions& opt);
std::string census_csv(const std::vector<CensusRecord>& records);

// The UN Security Council: players 0..4 permanent, 5..14 elected.
SimpleGame make_unsc();

}  // namespace sgames

#endif  // SGAMES_SUITES_H_
