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


#include "sgames/weights.h"

#include "sgames/desirability.h"
#include "sgames/errors.h"
#include "simplex.h"

namespace sgames {

namespace {

using internal::PhaseOneResult;

// Equivalent players are interchangeable, so a representation may give
// them equal weights and a coalition is described by its count per class.
// The alternative system of the weight LP, over lambda_p (minimal winning
// count vectors), mu_p (maximal losing ones) and one slack per class:
//   sum lambda p - sum mu p + s = 0   (one row per class)
//   sum lambda - sum mu         = 0
//   sum mu                      = 1
// It is feasible exactly when the weight LP is not.
struct Alternative {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> winning;
  std::vector<std::vector<int>> losing;
  PhaseOneResult result;
};

// Beyond this many count vectors the system falls back to single players.
constexpr long kMaxCountVectors = 1 << 14;

std::vector<std::vector<int>> equivalence_classes(const SimpleGame& game) {
  const DesirabilityRelation rel = desirability(game);
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(game.n(), 0);
  for (int i = 0; i < game.n(); ++i) {
    if (placed[i]) continue;
    classes.push_back({});
    for (int j = i; j < game.n(); ++j) {
      if (!placed[j] && rel.equivalent(i, j)) {
        placed[j] = 1;
        classes.back().push_back(j);
      }
    }
  }
  return classes;
}

// The first count[c] players of each class.
Coalition realize(const std::vector<std::vector<int>>& classes,
                  const std::vector<int>& count) {
  Coalition x = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    for (int k = 0; k < count[c]; ++k) x |= bit(classes[c][k]);
  }
  return x;
}

void count_vectors(const SimpleGame& game, Alternative& alt) {
  const auto& classes = alt.classes;
  const size_t d = classes.size();
  std::vector<int> count(d, 0);
  auto wins = [&](const std::vector<int>& v) {
    return is_winning(game, realize(classes, v));
  };
  while (true) {
    const bool w = wins(count);
    bool extreme = true;
    for (size_t c = 0; c < d && extreme; ++c) {
      std::vector<int> next = count;
      if (w && count[c] > 0) {
        --next[c];
        extreme = !wins(next);
      } else if (!w && count[c] < static_cast<int>(classes[c].size())) {
        ++next[c];
        extreme = wins(next);
      }
    }
    if (extreme) (w ? alt.winning : alt.losing).push_back(count);
    size_t c = 0;
    while (c < d && count[c] == static_cast<int>(classes[c].size())) {
      count[c++] = 0;
    }
    if (c == d) break;
    ++count[c];
  }
}

std::vector<int> indicator(Coalition x, int n) {
  std::vector<int> v(n, 0);
  for (int i : members_of(x)) v[i] = 1;
  return v;
}

Alternative solve_alternative(const SimpleGame& game) {
  Alternative alt;
  alt.classes = equivalence_classes(game);
  long vectors = 1;
  for (const auto& c : alt.classes) {
    vectors *= static_cast<long>(c.size()) + 1;
    if (vectors > kMaxCountVectors) break;
  }
  if (vectors <= kMaxCountVectors) {
    count_vectors(game, alt);
  } else {
    alt.classes.clear();
    for (int i = 0; i < game.n(); ++i) alt.classes.push_back({i});
    for (Coalition m : game.min_winning()) {
      alt.winning.push_back(indicator(m, game.n()));
    }
    for (Coalition l : maximal_losing(game)) {
      alt.losing.push_back(indicator(l, game.n()));
    }
  }
  const int d = static_cast<int>(alt.classes.size());
  const size_t w = alt.winning.size(), l = alt.losing.size();
  const size_t cols = w + l + d;
  std::vector<std::vector<Rational>> a(d + 2, std::vector<Rational>(cols));
  for (size_t c = 0; c < w; ++c) {
    for (int i = 0; i < d; ++i) a[i][c] = alt.winning[c][i];
    a[d][c] = 1;
  }
  for (size_t c = 0; c < l; ++c) {
    for (int i = 0; i < d; ++i) a[i][w + c] = -alt.losing[c][i];
    a[d][w + c] = -1;
    a[d + 1][w + c] = 1;
  }
  for (int i = 0; i < d; ++i) a[i][w + l + i] = 1;
  std::vector<Rational> b(d + 2, 0);
  b[d + 1] = 1;
  alt.result = internal::phase_one(a, b);
  return alt;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer m = 1;
  for (const auto& v : values) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(),
                                       v.get_den_mpz_t());
  return m;
}

IntegerForm integer_form(const Rational& quota,
                         const std::vector<Rational>& weights) {
  std::vector<Rational> all = weights;
  all.push_back(quota);
  const Integer scale = lcm_of_denominators(all);
  IntegerForm f;
  Integer g = 0;
  for (const auto& v : all) {
    Integer z = v.get_num() * (scale / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    f.weights.push_back(z);
  }
  f.quota = f.weights.back();
  f.weights.pop_back();
  if (g > 1) {
    f.quota /= g;
    for (auto& z : f.weights) z /= g;
  }
  return f;
}

template <typename Number>
Number weight_of(const std::vector<Number>& weights, Coalition x) {
  Number s = 0;
  for (Coalition rest = x; rest; rest &= rest - 1) s += weights[lowest(rest)];
  return s;
}

template <typename Number>
bool separates(const SimpleGame& game, const std::vector<Coalition>& losing,
               const Number& quota, const std::vector<Number>& weights) {
  for (const auto& w : weights) {
    if (sgn(w) < 0) return false;
  }
  for (Coalition m : game.min_winning()) {
    if (weight_of(weights, m) < quota) return false;
  }
  for (Coalition l : losing) {
    if (!(weight_of(weights, l) < quota)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const WeightedRepresentation& rep) {
  std::string s = "[" + to_string(rep.quota) + ";";
  for (size_t i = 0; i < rep.weights.size(); ++i) {
    s += (i ? ", " : " ") + to_string(rep.weights[i]);
  }
  return s + "]";
}

std::optional<WeightedRepresentation> synthesize_weights(
    const SimpleGame& game) {
  const int n = game.n();
  if (is_trivial_full(game)) {
    WeightedRepresentation rep{0, std::vector<Rational>(n, 0), std::nullopt};
    rep.integer_form =
        IntegerForm{0, std::vector<Integer>(n, 0)};
    return rep;
  }
  Alternative alt = solve_alternative(game);
  if (alt.result.feasible) return std::nullopt;
  const auto& y = alt.result.ray;
  const int d = static_cast<int>(alt.classes.size());
  const Rational& r = y[d + 1];
  WeightedRepresentation rep;
  rep.quota = y[d] / r;
  rep.weights.assign(n, 0);
  for (int c = 0; c < d; ++c) {
    for (int i : alt.classes[c]) rep.weights[i] = -y[c] / r;
  }
  rep.integer_form = integer_form(rep.quota, rep.weights);
  if (!verify_representation(game, rep)) {
    throw Error("weight synthesis produced an invalid representation " +
                to_string(rep));
  }
  return rep;
}

bool verify_representation(const SimpleGame& game,
                           const WeightedRepresentation& rep) {
  if (static_cast<int>(rep.weights.size()) != game.n()) {
    throw InvalidInput("representation has " +
                       std::to_string(rep.weights.size()) +
                       " weights for a game on " + std::to_string(game.n()) +
                       " players");
  }
  const std::vector<Coalition> losing = maximal_losing(game);
  if (!separates(game, losing, rep.quota, rep.weights)) return false;
  if (rep.integer_form) {
    const auto& f = *rep.integer_form;
    if (static_cast<int>(f.weights.size()) != game.n()) {
      throw InvalidInput("integer form has the wrong dimension");
    }
    if (!separates(game, losing, f.quota, f.weights)) return false;
  }
  return true;
}

bool is_weighted(const SimpleGame& game) {
  return synthesize_weights(game).has_value();
}

TradingTransform farkas_certificate(const SimpleGame& game) {
  if (is_trivial_full(game)) {
    throw PreconditionViolation("farkas_certificate: game is weighted");
  }
  Alternative alt = solve_alternative(game);
  if (!alt.result.feasible) {
    throw PreconditionViolation("farkas_certificate: game is weighted");
  }
  const auto& z = alt.result.x;
  const size_t w = alt.winning.size(), l = alt.losing.size();
  std::vector<Rational> multipliers(z.begin(), z.begin() + w + l);
  const Integer scale = lcm_of_denominators(multipliers);
  // Each copy takes the next players of every class in cyclic order, with
  // separate cursors per side, so both sides cover each player as evenly
  // as their class totals allow.
  TradingTransform t;
  std::vector<long> need(game.n(), 0), have(game.n(), 0);
  const size_t d = alt.classes.size();
  std::vector<size_t> x_cursor(d, 0), y_cursor(d, 0);
  for (size_t c = 0; c < w + l; ++c) {
    Rational scaled = z[c] * scale;
    const long copies = scaled.get_num().get_si();
    const bool win = c < w;
    const auto& count = win ? alt.winning[c] : alt.losing[c - w];
    auto& side = win ? t.x : t.y;
    auto& tally = win ? need : have;
    auto& cursor = win ? x_cursor : y_cursor;
    for (long k = 0; k < copies; ++k) {
      Coalition s = 0;
      for (size_t cl = 0; cl < d; ++cl) {
        const auto& members = alt.classes[cl];
        for (int j = 0; j < count[cl]; ++j) {
          s |= bit(members[cursor[cl]]);
          cursor[cl] = (cursor[cl] + 1) % members.size();
        }
      }
      side.push_back(s);
      for (int i : members_of(s)) ++tally[i];
    }
  }
  // Losing multiplicities can fall short of winning ones only when the
  // quota is bounded; pad with the empty coalition, which loses.
  while (t.y.size() < t.x.size()) t.y.push_back(0);
  for (int i = 0; i < game.n(); ++i) {
    long surplus = have[i] - need[i];
    for (auto& c : t.y) {
      if (surplus <= 0) break;
      if (contains(c, i)) {
        c &= ~bit(i);
        --surplus;
      }
    }
  }
  CertificateCheck check =
      check_certificate(game, t, CertificateKind::kNonweightedness);
  if (!check.valid) {
    throw Error("farkas_certificate produced an invalid transform: " +
                check.reason);
  }
  return t;
}

}  // namespace sgames
