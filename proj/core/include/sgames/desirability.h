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

#ifndef SGAMES_DESIRABILITY_H_
#define SGAMES_DESIRABILITY_H_

#include <optional>
#include <vector>

#include "sgames/coalition.h"
#include "sgames/errors.h"
#include "sgames/game.h"
#include "sgames/trading.h"

namespace sgames {

// Raised by operations that need a complete game; carries a certificate of
// incompleteness for the offending game.
class NotComplete : public Error {
 public:
  explicit NotComplete(TradingTransform certificate)
      : Error("game is not complete; certificate " + to_string(certificate)),
        certificate_(std::move(certificate)) {}

  const TradingTransform& certificate() const { return certificate_; }

 private:
  TradingTransform certificate_;
};

// Isbell's relation: geq(i, j) when i can replace j in every winning
// coalition that contains j but not i.
class DesirabilityRelation {
 public:
  explicit DesirabilityRelation(int n) : n_(n), geq_(n * n, 0) {}

  int n() const { return n_; }
  bool geq(int i, int j) const { return geq_[i * n_ + j]; }
  bool strictly(int i, int j) const { return geq(i, j) && !geq(j, i); }
  bool equivalent(int i, int j) const { return geq(i, j) && geq(j, i); }
  bool comparable(int i, int j) const { return geq(i, j) || geq(j, i); }
  void set(int i, int j, bool v) { geq_[i * n_ + j] = v; }

  bool is_total() const;

 private:
  int n_;
  std::vector<char> geq_;
};

DesirabilityRelation desirability(const SimpleGame& game);

// A minimal winning coalition X with i in X, j not in X and X-i+j losing,
// present exactly when i is strictly more desirable than j.
std::optional<Coalition> strictly_more_desirable(const SimpleGame& game, int i,
                                                 int j);

// Desirability is a total preorder.
bool is_complete(const SimpleGame& game);

// Swap-form certificate (M1, M2; M1-j+i, M2-i+j) built from an
// incomparable pair, or empty for complete games.
std::optional<TradingTransform> incompleteness_certificate(
    const SimpleGame& game);

// Independent completeness test: searches pairs of minimal winning
// coalitions A, B and players x in A-B, y in B-A for a swap leaving both
// losing.
std::optional<TradingTransform> find_swap_certificate(const SimpleGame& game);

// Equivalence classes in descending desirability, each sorted by index.
// Throws NotComplete for incomplete games.
std::vector<std::vector<int>> desirability_levels(const SimpleGame& game);

}  // namespace sgames

#endif  // SGAMES_DESIRABILITY_H_
