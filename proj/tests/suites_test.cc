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


#include "sgames/suites.h"

#include <gtest/gtest.h>

#include <sstream>

#include "sgames/errors.h"

namespace sgames {
namespace {

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 7u);
  EXPECT_THROW(run_suite("nope", {}), InvalidInput);
}

TEST(Suites, ElgotPasses) {
  const SuiteReport r = run_suite("elgot", {});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 2u);
}

TEST(Suites, CompletenessPasses) {
  EXPECT_TRUE(check_completeness({}).passed());
}

TEST(Suites, AppendixCoversTheGrid) {
  const CheckOutcome c = check_appendix({});
  EXPECT_GT(c.checked, 16000);
}

TEST(Suites, Census) {
  SuiteOptions opt;
  opt.n = 3;
  const auto records = census(opt);
  EXPECT_EQ(records.size(), 19u);
  int weighted = 0;
  for (const auto& r : records) {
    weighted += r.weighted;
    if (r.weighted) {
      EXPECT_TRUE(r.complete);
    }
  }
  EXPECT_EQ(weighted, 19);
  const std::string csv = census_csv(records);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 20);
}

TEST(Suites, CensusReportAtFour) {
  const SuiteReport r = run_suite("census", {});
  EXPECT_EQ(r.census.size(), 167u);
  EXPECT_TRUE(r.passed());
}

}  // namespace
}  // namespace sgames
