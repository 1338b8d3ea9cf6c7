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

#ifndef SGAMES_TRADING_H_
#define SGAMES_TRADING_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgames/coalition.h"
#include "sgames/game.h"

namespace sgames {

// Two equal-length coalition sequences (X_1..X_j; Y_1..Y_j). Duplicates are
// allowed on either side.
struct TradingTransform {
  std::vector<Coalition> x;
  std::vector<Coalition> y;

  bool operator==(const TradingTransform&) const = default;
};

// Sides sorted, so transforms equal as multiset pairs compare equal.
TradingTransform canonicalize(TradingTransform t);

std::string to_string(const TradingTransform& t);

// Per-player balance. Throws InvalidInput when the sides differ in length.
bool is_trading_transform(const TradingTransform& t);

// A balanced transform over the game's players with every X winning and
// every Y losing.
bool is_certificate_of_nonweightedness(const SimpleGame& game,
                                       const TradingTransform& t);

// The swap players (x, y) when t = (X+x, Y+y; X+y, Y+x) for some X, Y, with
// the Y side in either order.
std::optional<std::pair<int, int>> swap_players(const TradingTransform& t);

// A length-2 certificate of nonweightedness in swap form.
bool is_certificate_of_incompleteness(const SimpleGame& game,
                                      const TradingTransform& t);

enum class CertificateKind { kNonweightedness, kIncompleteness };

// Outcome of the single validation chokepoint used for every certificate
// the library emits.
struct CertificateCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

CertificateCheck check_certificate(const SimpleGame& game,
                                   const TradingTransform& t,
                                   CertificateKind kind);

// Bounded search for a certificate of nonweightedness with 2 <= j <=
// max_len. X sides are multisets of minimal winning coalitions; Y sides are
// trimmed subsets of maximal losing coalitions. An empty result does not
// prove weightedness.
std::optional<TradingTransform> search_certificate(const SimpleGame& game,
                                                   int max_len = 4);

}  // namespace sgames

#endif  // SGAMES_TRADING_H_
