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


#include "sgames/coalition.h"

#include <gtest/gtest.h>

#include "sgames/errors.h"

namespace sgames {
namespace {

TEST(Coalition, MembersRoundTrip) {
  const Coalition c = make_coalition({0, 3, 5});
  EXPECT_EQ(c, bit(0) | bit(3) | bit(5));
  EXPECT_EQ(members_of(c), (std::vector<int>{0, 3, 5}));
  EXPECT_EQ(cardinality(c), 3);
  EXPECT_EQ(lowest(c), 0);
  EXPECT_EQ(to_string(c), "{0,3,5}");
}

TEST(Coalition, RejectsOutOfRangePlayers) {
  EXPECT_THROW(make_coalition({64}), InvalidInput);
  EXPECT_THROW(make_coalition({-1}), InvalidInput);
}

TEST(Coalition, SubsetAndFullSet) {
  EXPECT_TRUE(is_subset(0b0101, 0b1101));
  EXPECT_FALSE(is_subset(0b0011, 0b1101));
  EXPECT_EQ(full_set(4), Coalition{15});
  EXPECT_EQ(full_set(64), ~Coalition{0});
}

TEST(Coalition, MinimalizeAndMaximalize) {
  const std::vector<Coalition> family = {0b011, 0b001, 0b110, 0b111, 0b100};
  EXPECT_EQ(minimalize(family), (std::vector<Coalition>{0b001, 0b100}));
  EXPECT_EQ(maximalize(family), (std::vector<Coalition>{0b111}));
  EXPECT_TRUE(is_antichain({0b011, 0b101, 0b110}));
  EXPECT_FALSE(is_antichain({0b011, 0b001}));
}

}  // namespace
}  // namespace sgames
