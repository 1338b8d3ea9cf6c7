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


#include "sgames/canonical.h"

#include <map>

#include "sgames/composition.h"
#include "sgames/desirability.h"
#include "sgames/errors.h"
#include "sgames/weights.h"

namespace sgames {

namespace {

CatalogParams head(int n, int k) { return {Family::kH, {n}, {k}}; }

bool is_refined_head(const CatalogParams& p) {
  return p.family == Family::kH &&
         !violated_constraint(p, Mode::kIndecomposable);
}

bool is_core_family(Family f) {
  return f == Family::kB1 || f == Family::kB2 || f == Family::kB3 ||
         f == Family::kT1 || f == Family::kT3;
}

// (n, k) when the minimal winning coalitions are exactly the k-subsets.
std::optional<std::pair<int, int>> as_k_out_of_n(const SimpleGame& g) {
  const int k = cardinality(g.min_winning()[0]);
  double count = 1;
  for (int i = 0; i < k; ++i) count = count * (g.n() - i) / (i + 1);
  for (Coalition m : g.min_winning()) {
    if (cardinality(m) != k) return std::nullopt;
  }
  if (static_cast<double>(g.min_winning().size()) + 0.5 < count) {
    return std::nullopt;
  }
  return std::make_pair(g.n(), k);
}

// The refined heads whose composition is H_{n,k}.
std::vector<CatalogParams> head_run(int n, int k) {
  if (k == n) return std::vector<CatalogParams>(n - 1, head(2, 2));
  if (k == 1) return std::vector<CatalogParams>(n - 1, head(2, 1));
  return {head(n, k)};
}

bool is_anti_unanimity(const SimpleGame& g) {
  auto nk = as_k_out_of_n(g);
  return nk && nk->second == 1 && g.n() >= 2;
}

bool pivot_in_least_level(const SimpleGame& outer, int pivot) {
  if (!is_complete(outer)) return false;
  const auto levels = desirability_levels(outer);
  for (int i : levels.back()) {
    if (i == pivot) return true;
  }
  return false;
}

int least_desirable_pivot(const SimpleGame& g) {
  const auto levels = desirability_levels(g);
  const Coalition idle = dummies(g);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    for (auto p = it->rbegin(); p != it->rend(); ++p) {
      if (!contains(idle, *p)) return *p;
    }
  }
  throw PreconditionViolation("every player is a dummy");
}

std::string diagnose(const SimpleGame& game) {
  if (!is_complete(game)) return "not complete";
  if (!is_weighted(game)) return "not weighted";
  return "terminal not in catalog";
}

void append(std::vector<CatalogParams>& heads,
            const std::vector<CatalogParams>& more) {
  heads.insert(heads.end(), more.begin(), more.end());
}

}  // namespace

std::string to_string(const CanonicalForm& form) {
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += " o ";
    s += part;
  };
  for (const auto& h : form.heads) {
    if (h.k[0] == h.n[0]) {
      add("U" + std::to_string(h.n[0]));
    } else if (h.k[0] == 1) {
      add("A" + std::to_string(h.n[0]));
    } else {
      add("H(" + std::to_string(h.n[0]) + "," + std::to_string(h.k[0]) + ")");
    }
  }
  if (form.core) add(to_string(*form.core));
  if (form.tail) add("A" + std::to_string(*form.tail));
  return s.empty() ? "U1" : s;
}

std::optional<std::string> form_violation(const CanonicalForm& form) {
  for (const auto& h : form.heads) {
    if (!is_refined_head(h)) {
      return "head " + to_string(h) + " is not A2, U2 or H_{n,k} with 1<k<n";
    }
  }
  if (form.core) {
    if (!is_core_family(form.core->family)) {
      return "core must be B1, B2, B3, T1 or T3";
    }
    if (auto c = violated_constraint(*form.core, Mode::kIndecomposable)) {
      return "core " + to_string(*form.core) + ": " + *c;
    }
  }
  if (form.tail) {
    if (*form.tail < 2) return std::string("tail needs n >= 2");
    if (!form.core || form.core->family != Family::kB2) {
      return std::string("a tail needs a B2 core");
    }
  }
  return std::nullopt;
}

SimpleGame build_from_canonical(const CanonicalForm& form) {
  if (auto v = form_violation(form)) throw ConstraintViolation(*v);
  std::vector<SimpleGame> factors;
  for (const auto& h : form.heads) factors.push_back(make(h));
  if (form.core) factors.push_back(make(*form.core, Mode::kIndecomposable));
  if (form.tail) factors.push_back(make_anti_unanimity(*form.tail));
  if (factors.empty()) return make_unanimity(1);
  SimpleGame acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) {
    acc = compose(acc, least_desirable_pivot(acc), factors[i]);
  }
  return acc;
}

CanonicalOutcome canonical_analysis(const SimpleGame& game) {
  if (Coalition d = dummies(game)) {
    throw DummiesPresent("dummies present: " + to_string(d));
  }
  CanonicalForm form;
  SimpleGame g = game;
  auto fail = [&] { return CanonicalOutcome{std::nullopt, diagnose(game)}; };
  while (true) {
    if (g.n() == 1) return {form, ""};
    if (auto tag = classify(g)) {
      if (tag->family == Family::kH) {
        form.heads.push_back(*tag);
      } else {
        form.core = *tag;
      }
      return {form, ""};
    }
    if (Coalition v = vetoers(g)) {
      const int m = cardinality(v);
      if (m == g.n()) {
        append(form.heads, head_run(m, m));
        return {form, ""};
      }
      append(form.heads, head_run(m + 1, m + 1));
      g = *reduced_game(g, v).game;
      continue;
    }
    if (Coalition p = passers(g)) {
      const int m = cardinality(p);
      if (m == g.n()) {
        append(form.heads, head_run(m, 1));
        return {form, ""};
      }
      append(form.heads, head_run(m + 1, 1));
      g = *subgame(g, p).game;
      continue;
    }
    const auto decs = find_decompositions(g);
    const CompositionSpec* chosen = nullptr;
    for (const auto& spec : decs) {
      auto nk = as_k_out_of_n(spec.outer);
      if (!nk || nk->second <= 1 || nk->second >= nk->first) continue;
      if (!chosen || (passers(chosen->inner) != 0 && passers(spec.inner) == 0)) {
        chosen = &spec;
      }
    }
    if (chosen) {
      auto nk = *as_k_out_of_n(chosen->outer);
      form.heads.push_back(head(nk.first, nk.second));
      g = chosen->inner;
      continue;
    }
    for (const auto& spec : decs) {
      if (!is_anti_unanimity(spec.inner)) continue;
      auto tag = classify(spec.outer);
      if (!tag || tag->family != Family::kB2) continue;
      if (!pivot_in_least_level(spec.outer, spec.pivot)) continue;
      form.core = *tag;
      form.tail = spec.inner.n();
      return {form, ""};
    }
    return fail();
  }
}

std::optional<CanonicalForm> canonical_decompose(const SimpleGame& game) {
  return canonical_analysis(game).form;
}

bool recognize_ideal_weighted(const SimpleGame& game) {
  return canonical_decompose(game).has_value();
}

namespace {

class PathEnumerator {
 public:
  const std::vector<CanonicalForm>& paths(const SimpleGame& g) {
    const std::string key = g.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<CanonicalForm> out;
    auto add = [&](CanonicalForm f) {
      for (const auto& seen : out) {
        if (seen == f) return;
      }
      out.push_back(std::move(f));
    };
    if (g.n() == 1) add({});
    if (auto tag = classify(g)) {
      CanonicalForm f;
      if (tag->family == Family::kH) {
        f.heads.push_back(*tag);
      } else {
        f.core = *tag;
      }
      add(f);
    }
    for (const auto& spec : find_decompositions(g)) {
      if (auto nk = as_k_out_of_n(spec.outer)) {
        const auto prefix = head_run(nk->first, nk->second);
        for (const auto& rest : paths(spec.inner)) {
          CanonicalForm f = rest;
          f.heads.insert(f.heads.begin(), prefix.begin(), prefix.end());
          add(f);
        }
        continue;
      }
      if (!is_anti_unanimity(spec.inner)) continue;
      auto tag = classify(spec.outer);
      if (tag && tag->family == Family::kB2 &&
          pivot_in_least_level(spec.outer, spec.pivot)) {
        add({{}, *tag, spec.inner.n()});
      }
    }
    return memo_[key] = std::move(out);
  }

 private:
  std::map<std::string, std::vector<CanonicalForm>> memo_;
};

}  // namespace

std::vector<CanonicalForm> all_canonical_paths(const SimpleGame& game) {
  PathEnumerator e;
  return e.paths(game);
}

bool verify_uniqueness(const SimpleGame& game) {
  auto form = canonical_decompose(game);
  if (!form) {
    throw PreconditionViolation("verify_uniqueness: game is not recognized");
  }
  auto all = all_canonical_paths(game);
  return all.size() == 1 && all[0] == *form;
}

}  // namespace sgames
