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


#include "sgames/enumerate.h"

#include <set>
#include <string>

#include "sgames/errors.h"
#include "sgames/isomorphism.h"

namespace sgames {

namespace {

void extend(int n, Coalition next, std::vector<Coalition>& chosen,
            const std::function<void(const SimpleGame&)>& visit) {
  const Coalition limit = Coalition{1} << n;
  for (Coalition s = next; s < limit; ++s) {
    bool comparable = false;
    for (Coalition c : chosen) {
      if (is_subset(c, s) || is_subset(s, c)) {
        comparable = true;
        break;
      }
    }
    if (comparable) continue;
    chosen.push_back(s);
    visit(SimpleGame(n, chosen));
    extend(n, s + 1, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_game(int n, const std::function<void(const SimpleGame&)>& visit,
                   bool allow_five) {
  const int cap = allow_five ? kEnumerateHardCap : kEnumerateDefaultCap;
  if (n < 1 || n > cap) {
    throw InvalidInput("enumeration supports 1 <= n <= " +
                       std::to_string(cap) +
                       (allow_five ? "" : " (n = 5 needs the opt-in flag)"));
  }
  std::vector<Coalition> chosen;
  extend(n, 0, chosen, visit);
}

std::vector<SimpleGame> enumerate_games(int n, bool allow_five) {
  std::vector<SimpleGame> out;
  for_each_game(n, [&](const SimpleGame& g) { out.push_back(g); }, allow_five);
  return out;
}

std::vector<SimpleGame> collapse_isomorphic(
    const std::vector<SimpleGame>& games) {
  std::set<std::string> seen;
  std::vector<SimpleGame> out;
  for (const auto& g : games) {
    if (seen.insert(canonical_key(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace sgames
