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

#include "sgames/trading.h"

#include <algorithm>
#include <array>

#include "sgames/errors.h"

namespace sgames {

namespace {

using Counts = std::array<int, kMaxPlayers>;

Counts occurrences(const std::vector<Coalition>& side) {
  Counts c{};
  for (Coalition s : side) {
    for (Coalition rest = s; rest; rest &= rest - 1) ++c[lowest(rest)];
  }
  return c;
}

std::optional<int> single_member(Coalition c) {
  if (cardinality(c) != 1) return std::nullopt;
  return lowest(c);
}

}  // namespace

TradingTransform canonicalize(TradingTransform t) {
  std::sort(t.x.begin(), t.x.end());
  std::sort(t.y.begin(), t.y.end());
  return t;
}

std::string to_string(const TradingTransform& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.x.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t.x[i]);
  }
  s += "; ";
  for (size_t i = 0; i < t.y.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t.y[i]);
  }
  return s + ")";
}

bool is_trading_transform(const TradingTransform& t) {
  if (t.x.size() != t.y.size()) {
    throw InvalidInput("trading transform sides differ in length (" +
                       std::to_string(t.x.size()) + " vs " +
                       std::to_string(t.y.size()) + ")");
  }
  return occurrences(t.x) == occurrences(t.y);
}

std::optional<std::pair<int, int>> swap_players(const TradingTransform& t) {
  if (t.x.size() != 2 || t.y.size() != 2) return std::nullopt;
  for (int order = 0; order < 2; ++order) {
    Coalition y1 = t.y[order], y2 = t.y[1 - order];
    auto x = single_member(t.x[0] & ~y1);
    auto y = single_member(y1 & ~t.x[0]);
    if (!x || !y || *x == *y) continue;
    if ((t.x[1] & ~y2) != bit(*y) || (y2 & ~t.x[1]) != bit(*x)) continue;
    return std::make_pair(*x, *y);
  }
  return std::nullopt;
}

CertificateCheck check_certificate(const SimpleGame& game,
                                   const TradingTransform& t,
                                   CertificateKind kind) {
  auto fail = [](std::string why) { return CertificateCheck{false, why}; };
  if (t.x.size() != t.y.size()) return fail("sides differ in length");
  if (t.x.empty()) return fail("empty transform");
  for (const auto* side : {&t.x, &t.y}) {
    for (Coalition c : *side) {
      if (!is_subset(c, game.players())) {
        return fail("coalition " + to_string(c) + " outside the game");
      }
    }
  }
  Counts cx = occurrences(t.x), cy = occurrences(t.y);
  for (int a = 0; a < game.n(); ++a) {
    if (cx[a] != cy[a]) {
      return fail("player " + std::to_string(a) + " appears " +
                  std::to_string(cx[a]) + " times in X and " +
                  std::to_string(cy[a]) + " times in Y");
    }
  }
  for (size_t i = 0; i < t.x.size(); ++i) {
    if (!is_winning(game, t.x[i])) {
      return fail("X" + std::to_string(i + 1) + " = " + to_string(t.x[i]) +
                  " is losing");
    }
  }
  for (size_t i = 0; i < t.y.size(); ++i) {
    if (is_winning(game, t.y[i])) {
      return fail("Y" + std::to_string(i + 1) + " = " + to_string(t.y[i]) +
                  " is winning");
    }
  }
  if (kind == CertificateKind::kIncompleteness) {
    if (t.x.size() != 2) return fail("incompleteness needs length 2");
    if (!swap_players(t)) return fail("not in swap form");
  }
  return {true, ""};
}

bool is_certificate_of_nonweightedness(const SimpleGame& game,
                                       const TradingTransform& t) {
  if (!is_trading_transform(t)) return false;
  return check_certificate(game, t, CertificateKind::kNonweightedness).valid;
}

bool is_certificate_of_incompleteness(const SimpleGame& game,
                                      const TradingTransform& t) {
  if (t.x.size() != 2 || t.y.size() != 2) return false;
  return check_certificate(game, t, CertificateKind::kIncompleteness).valid;
}

namespace {

class CertificateSearch {
 public:
  CertificateSearch(const SimpleGame& game, const std::vector<Coalition>& losing,
                    int j)
      : n_(game.n()), j_(j), winning_(game.min_winning()), losing_(losing) {}

  std::optional<TradingTransform> run() {
    if (losing_.empty()) return std::nullopt;
    xs_.clear();
    need_.fill(0);
    if (choose_x(0)) return build();
    return std::nullopt;
  }

 private:
  bool choose_x(size_t from) {
    if (static_cast<int>(xs_.size()) == j_) {
      ys_.clear();
      have_.fill(0);
      return choose_y(0);
    }
    for (size_t i = from; i < winning_.size(); ++i) {
      xs_.push_back(winning_[i]);
      add(need_, winning_[i], 1);
      if (choose_x(i)) return true;
      add(need_, winning_[i], -1);
      xs_.pop_back();
    }
    return false;
  }

  bool choose_y(size_t from) {
    int left = j_ - static_cast<int>(ys_.size());
    int deficit = 0;
    for (int a = 0; a < n_; ++a) {
      int d = need_[a] - have_[a];
      if (d > left) return false;
      if (d > 0) deficit += d;
    }
    if (left == 0) return deficit == 0;
    for (size_t i = from; i < losing_.size(); ++i) {
      ys_.push_back(losing_[i]);
      add(have_, losing_[i], 1);
      if (choose_y(i)) return true;
      add(have_, losing_[i], -1);
      ys_.pop_back();
    }
    return false;
  }

  static void add(Counts& c, Coalition s, int delta) {
    for (Coalition rest = s; rest; rest &= rest - 1) c[lowest(rest)] += delta;
  }

  // Removes surplus occurrences from the losing side; subsets of losing
  // coalitions lose.
  TradingTransform build() {
    TradingTransform t{xs_, ys_};
    for (int a = 0; a < n_; ++a) {
      int surplus = have_[a] - need_[a];
      for (auto& y : t.y) {
        if (surplus == 0) break;
        if (contains(y, a)) {
          y &= ~bit(a);
          --surplus;
        }
      }
    }
    return t;
  }

  int n_;
  int j_;
  const std::vector<Coalition>& winning_;
  const std::vector<Coalition>& losing_;
  std::vector<Coalition> xs_, ys_;
  Counts need_{}, have_{};
};

}  // namespace

std::optional<TradingTransform> search_certificate(const SimpleGame& game,
                                                   int max_len) {
  if (max_len < 2) throw InvalidInput("max_len must be at least 2");
  std::vector<Coalition> losing = maximal_losing(game);
  for (int j = 2; j <= max_len; ++j) {
    CertificateSearch search(game, losing, j);
    if (auto t = search.run()) return t;
  }
  return std::nullopt;
}

}  // namespace sgames
