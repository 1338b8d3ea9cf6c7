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

#ifndef SGAMES_COALITION_H_
#define SGAMES_COALITION_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgames {

// A coalition is a bitmask over player indices; bit i set means player i is
// a member.
using Coalition = std::uint64_t;

inline constexpr int kMaxPlayers = 64;

constexpr Coalition bit(int i) { return Coalition{1} << i; }

constexpr Coalition full_set(int n) {
  return n >= kMaxPlayers ? ~Coalition{0} : (Coalition{1} << n) - 1;
}

constexpr bool contains(Coalition c, int i) { return (c >> i) & 1U; }

// a is a subset of b.
constexpr bool is_subset(Coalition a, Coalition b) { return (a & ~b) == 0; }

inline int cardinality(Coalition c) { return std::popcount(c); }

// Index of the lowest member; c must be nonempty.
inline int lowest(Coalition c) { return std::countr_zero(c); }

Coalition make_coalition(std::initializer_list<int> members);
Coalition make_coalition(const std::vector<int>& members);
std::vector<int> members_of(Coalition c);

// "{0,2,5}".
std::string to_string(Coalition c);

// Inclusion-minimal members of `sets`, deduplicated, sorted ascending.
std::vector<Coalition> minimalize(std::vector<Coalition> sets);

// Inclusion-maximal members of `sets`, deduplicated, sorted ascending.
std::vector<Coalition> maximalize(std::vector<Coalition> sets);

bool is_antichain(const std::vector<Coalition>& sets);

}  // namespace sgames

#endif  // SGAMES_COALITION_H_
