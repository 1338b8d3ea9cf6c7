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


#include "sgames/catalog.h"

#include <functional>
#include <numeric>

#include "sgames/desirability.h"
#include "sgames/errors.h"
#include "sgames/profile.h"

namespace sgames {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int levels;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::kH, "H", 1},
    {Family::kU, "U", 1},
    {Family::kA, "A", 1},
    {Family::kHierDisj, "HierDisj", 2},
    {Family::kHierConj, "HierConj", 2},
    {Family::kDelta1, "Delta1", 3},
    {Family::kDelta2, "Delta2", 3},
    {Family::kB1, "B1", 2},
    {Family::kB2, "B2", 2},
    {Family::kB3, "B3", 2},
    {Family::kT1, "T1", 3},
    {Family::kT2, "T2", 3},
    {Family::kT3, "T3", 3},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw InvalidInput("unknown family");
}

using Check = std::optional<std::string>;

// First failing condition among (holds, text) pairs.
Check first_failure(std::initializer_list<std::pair<bool, const char*>> cs) {
  for (const auto& [holds, text] : cs) {
    if (!holds) return std::string(text);
  }
  return std::nullopt;
}

Check hier_disj(const std::vector<int>& n, const std::vector<int>& k) {
  return first_failure({{1 <= k[0], "1 <= k1"},
                        {k[0] < k[1], "k1 < k2"},
                        {k[0] <= n[0], "k1 <= n1"},
                        {k[1] - k[0] < n[1], "k2 - k1 < n2"}});
}

Check hier_conj(const std::vector<int>& n, const std::vector<int>& k) {
  return first_failure({{1 <= k[0], "1 <= k1"},
                        {k[0] <= k[1], "k1 <= k2"},
                        {k[0] <= n[0], "k1 <= n1"},
                        {k[1] - k[0] < n[1], "k2 - k1 < n2"}});
}

Check delta1(const std::vector<int>& n, const std::vector<int>& k) {
  return first_failure({{k[0] < k[2], "k1 < k3"},
                        {k[1] < k[2], "k2 < k3"},
                        {n[0] >= k[0], "n1 >= k1"},
                        {n[1] > k[1] - k[0], "n2 > k2 - k1"},
                        {n[2] > k[2] - k[1], "n3 > k3 - k2"}});
}

Check delta2_conditions(const std::vector<int>& n, const std::vector<int>& k) {
  return first_failure({{k[0] < k[1], "k1 < k2"},
                        {k[1] < k[2], "k2 < k3"},
                        {n[0] + n[1] >= k[1], "n1 + n2 >= k2"},
                        {n[2] > k[2] - k[1], "n3 > k3 - k2"},
                        {n[1] + n[2] > k[2] - k[0], "n2 + n3 > k3 - k1"}});
}

Check delta2(const std::vector<int>& n, const std::vector<int>& k) {
  if (n[1] > k[1] - k[0]) return std::string("n2 <= k2 - k1");
  return delta2_conditions(n, k);
}

Check shape(const CatalogParams& p) {
  const int levels = info(p.family).levels;
  const bool one_level_k =
      p.family == Family::kU || p.family == Family::kA;
  if (static_cast<int>(p.n.size()) != levels) {
    return "expected " + std::to_string(levels) + " level sizes";
  }
  if (!one_level_k && static_cast<int>(p.k.size()) != levels) {
    return "expected " + std::to_string(levels) + " thresholds";
  }
  for (int v : p.n) {
    if (v < 1) return std::string("level sizes are positive");
  }
  for (int v : p.k) {
    if (v < 1) return std::string("thresholds are positive");
  }
  if (std::accumulate(p.n.begin(), p.n.end(), 0) > kMaxPlayers) {
    return std::string("at most 64 players");
  }
  return std::nullopt;
}

Check family_constraints(const CatalogParams& p, Mode mode) {
  const auto& n = p.n;
  const auto& k = p.k;
  const bool refined = mode == Mode::kIndecomposable;
  switch (p.family) {
    case Family::kH:
      if (auto c = first_failure({{1 <= k[0] && k[0] <= n[0], "1 <= k <= n"}}))
        return c;
      if (refined && !(n[0] == 2 || (1 < k[0] && k[0] < n[0]))) {
        return std::string("A2, U2 or 1 < k < n");
      }
      return std::nullopt;
    case Family::kU:
    case Family::kA:
      if (refined && n[0] != 2) return std::string("n = 2");
      return std::nullopt;
    case Family::kHierDisj:
      return hier_disj(n, k);
    case Family::kHierConj:
      return hier_conj(n, k);
    case Family::kDelta1:
      return delta1(n, k);
    case Family::kDelta2:
      return delta2(n, k);
    case Family::kB1:
      if (auto c = hier_conj(n, k)) return c;
      return first_failure(
          {{k[0] < n[0], "k1 < n1"},
           {k[1] - k[0] == n[1] - 1, "k2 - k1 = n2 - 1"},
           {n[1] - 1 > 0, "n2 - 1 > 0"},
           {!refined || n[1] - 1 > 1, "n2 - 1 > 1"}});
    case Family::kB2:
      if (auto c = hier_disj(n, k)) return c;
      return first_failure({{1 < k[0], "1 < k1"},
                            {k[0] <= n[0], "k1 <= n1"},
                            {k[1] <= n[1], "k2 <= n2"},
                            {k[1] == k[0] + 1, "k2 = k1 + 1"}});
    case Family::kB3:
      if (auto c = hier_disj(n, k)) return c;
      return first_failure({{k[0] <= n[0], "k1 <= n1"},
                            {k[1] > n[1], "k2 > n2"},
                            {n[1] > 2, "n2 > 2"},
                            {k[1] == k[0] + 1, "k2 = k1 + 1"}});
    case Family::kT1:
      if (auto c = delta1(n, k)) return c;
      return first_failure({{k[0] > 1, "k1 > 1"},
                            {k[1] < n[1], "k2 < n2"},
                            {k[2] == k[0] + 1, "k3 = k1 + 1"},
                            {n[2] == k[2] - k[1] + 1, "n3 = k3 - k2 + 1"},
                            {n[2] > 2, "n3 > 2"}});
    case Family::kT2:
      if (refined) return std::string("T2 is decomposable");
      if (auto c = delta1(n, k)) return c;
      return first_failure({{n[2] == k[2] - k[1] + 1, "n3 = k3 - k2 + 1"},
                            {n[2] > 2, "n3 > 2"},
                            {k[2] == k[0] + 1, "k3 = k1 + 1"},
                            {k[1] >= n[1], "k2 >= n2"}});
    case Family::kT3:
      if (auto c = delta2(n, k)) return c;
      return first_failure(
          {{k[2] - k[0] == n[1] + n[2] - 1, "k3 - k1 = n2 + n3 - 1"},
           {k[2] == k[1] + 1, "k3 = k2 + 1"},
           {k[1] - n[1] > k[0], "k2 - n2 > k1"},
           {n[2] > 1, "n3 > 1"}});
  }
  return std::nullopt;
}

std::function<bool(const Profile&)> predicate(Family f,
                                              const std::vector<int>& k) {
  switch (f) {
    case Family::kHierDisj:
    case Family::kB2:
    case Family::kB3:
      return [k](const Profile& l) {
        return l[0] >= k[0] || l[0] + l[1] >= k[1];
      };
    case Family::kHierConj:
    case Family::kB1:
      return [k](const Profile& l) {
        return l[0] >= k[0] && l[0] + l[1] >= k[1];
      };
    case Family::kDelta1:
    case Family::kT1:
    case Family::kT2:
      return [k](const Profile& l) {
        return l[0] >= k[0] ||
               (l[0] + l[1] >= k[1] && l[0] + l[1] + l[2] >= k[2]);
      };
    case Family::kDelta2:
    case Family::kT3:
      return [k](const Profile& l) {
        return l[0] + l[1] >= k[1] ||
               (l[0] >= k[0] && l[0] + l[1] + l[2] >= k[2]);
      };
    default:
      return [k](const Profile& l) { return l[0] >= k[0]; };
  }
}

std::optional<SimpleGame> expand_raw(Family f, const std::vector<int>& n,
                                     const std::vector<int>& k) {
  if (n.size() != 3 || k.size() != 3) {
    throw InvalidInput("tripartite parameters need three entries each");
  }
  for (int v : n) {
    if (v < 1) throw InvalidInput("level sizes are positive");
  }
  try {
    return game_from_profile_predicate(n, predicate(f, k));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

bool tripartite_without_dummies(const std::optional<SimpleGame>& g) {
  if (!g || dummies(*g) != 0 || !is_complete(*g)) return false;
  return desirability_levels(*g).size() == 3;
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

Family parse_family(const std::string& name) {
  for (const auto& i : kFamilies) {
    if (name == i.name) return i.family;
  }
  throw InvalidInput("unknown family '" + name + "'");
}

std::string to_string(const CatalogParams& p) {
  auto join = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  return family_name(p.family) + "(n=" + join(p.n) + ",k=" + join(p.k) + ")";
}

SimpleGame make_k_out_of_n(int n, int k) {
  return make(CatalogParams{Family::kH, {n}, {k}});
}

SimpleGame make_unanimity(int n) {
  return make(CatalogParams{Family::kU, {n}, {}});
}

SimpleGame make_anti_unanimity(int n) {
  return make(CatalogParams{Family::kA, {n}, {}});
}

SimpleGame make_hier_disjunctive(const std::vector<int>& n,
                                 const std::vector<int>& k) {
  return make(CatalogParams{Family::kHierDisj, n, k});
}

SimpleGame make_hier_conjunctive(const std::vector<int>& n,
                                 const std::vector<int>& k) {
  return make(CatalogParams{Family::kHierConj, n, k});
}

SimpleGame make_delta1(const std::vector<int>& n, const std::vector<int>& k) {
  return make(CatalogParams{Family::kDelta1, n, k});
}

SimpleGame make_delta2(const std::vector<int>& n, const std::vector<int>& k) {
  return make(CatalogParams{Family::kDelta2, n, k});
}

std::optional<SimpleGame> expand_delta1(const std::vector<int>& n,
                                        const std::vector<int>& k) {
  return expand_raw(Family::kDelta1, n, k);
}

std::optional<SimpleGame> expand_delta2(const std::vector<int>& n,
                                        const std::vector<int>& k) {
  return expand_raw(Family::kDelta2, n, k);
}

bool delta1_conditions_iff_tripartite(const std::vector<int>& n,
                                      const std::vector<int>& k) {
  const bool conditions = !delta1(n, k).has_value();
  return conditions == tripartite_without_dummies(expand_delta1(n, k));
}

bool delta2_conditions_iff_tripartite(const std::vector<int>& n,
                                      const std::vector<int>& k) {
  if (n.size() != 3 || k.size() != 3) {
    throw InvalidInput("tripartite parameters need three entries each");
  }
  if (n[1] > k[1] - k[0]) {
    throw PreconditionViolation("delta2 is defined for n2 <= k2 - k1");
  }
  const bool conditions = !delta2_conditions(n, k).has_value();
  return conditions == tripartite_without_dummies(expand_delta2(n, k));
}

std::optional<std::string> violated_constraint(const CatalogParams& p,
                                               Mode mode) {
  if (auto c = shape(p)) return c;
  return family_constraints(p, mode);
}

SimpleGame make(const CatalogParams& p, Mode mode) {
  if (auto c = violated_constraint(p, mode)) {
    throw ConstraintViolation(family_name(p.family) + ": " + *c +
                              " fails for " + to_string(p));
  }
  switch (p.family) {
    case Family::kU:
      return game_from_profile_predicate(
          p.n, [n = p.n[0]](const Profile& l) { return l[0] >= n; });
    case Family::kA:
      return game_from_profile_predicate(
          p.n, [](const Profile& l) { return l[0] >= 1; });
    default:
      return game_from_profile_predicate(p.n, predicate(p.family, p.k));
  }
}

SimpleGame make_type(Family family, const std::vector<int>& n,
                     const std::vector<int>& k, Mode mode) {
  return make(CatalogParams{family, n, k}, mode);
}

namespace {

bool rebuilds(const CatalogParams& p, const CompleteProfile& target) {
  if (violated_constraint(p, Mode::kIndecomposable)) return false;
  return to_profile(make(p, Mode::kIndecomposable)) == target;
}

int sum(const Profile& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

CatalogTag classify(const SimpleGame& game) {
  if (!is_complete(game) || dummies(game) != 0) return std::nullopt;
  const CompleteProfile prof = to_profile(game);
  const auto& n = prof.level_sizes;
  const auto& sm = prof.shift_min;
  std::vector<CatalogParams> candidates;
  if (n.size() == 1 && sm.size() == 1) {
    candidates.push_back({Family::kH, n, {sm[0][0]}});
  } else if (n.size() == 2 && sm.size() == 1) {
    candidates.push_back({Family::kB1, n, {sm[0][0], sum(sm[0])}});
  } else if (n.size() == 2 && sm.size() == 2) {
    // Sorted descending, so the level-1-only profile comes first.
    const int k1 = sm[0][0], k2 = sum(sm[1]);
    if (sm[0][1] == 0) {
      candidates.push_back({Family::kB2, n, {k1, k2}});
      candidates.push_back({Family::kB3, n, {k1, k2}});
    }
  } else if (n.size() == 3 && sm.size() == 2) {
    const Profile& a = sm[0];
    const Profile& b = sm[1];
    if (a[1] == 0 && a[2] == 0) {
      candidates.push_back({Family::kT1, n, {a[0], b[0] + b[1], sum(b)}});
    }
    for (const auto* p : {&a, &b}) {
      const Profile& other = p == &a ? b : a;
      if ((*p)[2] == 0) {
        candidates.push_back(
            {Family::kT3, n, {other[0], (*p)[0] + (*p)[1], sum(other)}});
      }
    }
  }
  for (const auto& c : candidates) {
    if (rebuilds(c, prof)) return c;
  }
  return std::nullopt;
}

std::vector<CatalogParams> catalog_grid(Family family, Mode mode,
                                        int max_level, int max_k,
                                        int max_total) {
  const int levels = info(family).levels;
  const bool k_free = family == Family::kU || family == Family::kA;
  std::vector<CatalogParams> out;
  std::vector<int> n(levels, 1), k(k_free ? 0 : levels, 1);
  // Odometer over n, then k.
  std::function<void(size_t)> over_k = [&](size_t i) {
    if (i == k.size()) {
      CatalogParams p{family, n, k};
      if (!violated_constraint(p, mode)) out.push_back(p);
      return;
    }
    for (k[i] = 1; k[i] <= max_k; ++k[i]) over_k(i + 1);
  };
  std::function<void(size_t, int)> over_n = [&](size_t i, int total) {
    if (i == n.size()) {
      over_k(0);
      return;
    }
    for (n[i] = 1; n[i] <= max_level && total + n[i] <= max_total; ++n[i]) {
      over_n(i + 1, total + n[i]);
    }
  };
  over_n(0, 0);
  return out;
}

}  // namespace sgames
