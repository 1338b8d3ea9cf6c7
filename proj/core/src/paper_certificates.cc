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


#include "sgames/paper_certificates.h"

#include <algorithm>

#include "sgames/composition.h"
#include "sgames/desirability.h"

namespace sgames {

namespace {

struct CaseInfo {
  CaseId id;
  const char* name;
};

constexpr CaseInfo kCases[] = {
    {CaseId::kB1Level2, "B1_level2"},
    {CaseId::kB2Level2, "B2_level2"},
    {CaseId::kB3Level2, "B3_level2"},
    {CaseId::kT1Level3, "T1_level3"},
    {CaseId::kT3Level3, "T3_level3"},
    {CaseId::kB1An, "B1_An"},
    {CaseId::kB3An, "B3_An"},
    {CaseId::kT1An, "T1_An"},
    {CaseId::kT3An, "T3_An"},
    {CaseId::kNotComplete, "NOT_COMPLETE"},
    {CaseId::kX1X2An, "X1X2_An"},
    {CaseId::kUn, "Un"},
};

using Pools = std::vector<std::vector<int>>;

std::string side_name(bool x_side, size_t i) {
  return std::string(x_side ? "X" : "Y") + std::to_string(i + 1);
}

Coalition expand_one(const Profile& p, const Pools& pools,
                     std::vector<size_t>& cursor, const std::string& name) {
  if (p.size() != pools.size()) {
    throw InvalidInput(name + " has " + std::to_string(p.size()) +
                       " levels, expected " + std::to_string(pools.size()));
  }
  Coalition c = 0;
  for (size_t l = 0; l < p.size(); ++l) {
    if (p[l] < 0) {
      throw UndefinedDisplay(name + " has exponent " + std::to_string(p[l]) +
                             " at level " + std::to_string(l + 1));
    }
    if (p[l] > static_cast<int>(pools[l].size())) {
      throw UnrealizableDisplay(name + " needs " + std::to_string(p[l]) +
                                " players of level " + std::to_string(l + 1) +
                                ", only " + std::to_string(pools[l].size()) +
                                " available");
    }
    for (int t = 0; t < p[l]; ++t) {
      c |= bit(pools[l][cursor[l] % pools[l].size()]);
      ++cursor[l];
    }
  }
  return c;
}

bool is_anti_unanimity(const SimpleGame& g) {
  if (g.n() < 2) return false;
  for (Coalition m : g.min_winning()) {
    if (cardinality(m) != 1) return false;
  }
  return static_cast<int>(g.min_winning().size()) == g.n();
}

bool is_unanimity(const SimpleGame& g) {
  return g.n() >= 2 && g.min_winning().size() == 1 &&
         g.min_winning()[0] == g.players();
}

std::optional<Coalition> wide_minimal(const SimpleGame& g) {
  for (Coalition m : g.min_winning()) {
    if (cardinality(m) >= 2) return m;
  }
  return std::nullopt;
}

// Seeds in the outer game; the pivot level pool lacks the pivot.
Display keylemma_display(CaseId id, const std::vector<int>& n,
                         const std::vector<int>& k) {
  switch (id) {
    case CaseId::kB1Level2: {
      const int k1 = k[0], d = k[1] - k[0];
      return {{{k1, d}, {k1, d - 1}}, {{k1 - 1, d + 1}, {k1 + 1, d - 2}}};
    }
    case CaseId::kB2Level2: {
      const int q = k[0];
      return {{{q, 0}, {0, q}}, {{q / 2, (q + 1) / 2}, {(q + 1) / 2, q / 2}}};
    }
    case CaseId::kB3Level2: {
      const int q = k[0];
      return {{{q, 0}, {q - 2, 2}}, {{q - 1, 1}, {q - 1, 1}}};
    }
    case CaseId::kT1Level3: {
      const int k1 = k[0], k2 = k[1], e = k[2] - k[1];
      return {{{k1, 0, 0}, {0, k2, e - 1}}, {{k1 - 1, 1, 0}, {1, k2 - 1, e - 1}}};
    }
    case CaseId::kT3Level3: {
      const int k1 = k[0], k2 = k[1], n2 = n[1], n3 = n[2];
      return {{{k2 - n2, n2, 0}, {k1, n2 - 1, n3 - 1}},
              {{k2 - n2, n2 - 1, 1}, {k1, n2, n3 - 2}}};
    }
    default:
      throw InapplicableCase("not a keylemma seed case");
  }
}

// Displays in the composite, the inner players forming the last level.
Display an_display(CaseId id, const std::vector<int>& n,
                   const std::vector<int>& k) {
  switch (id) {
    case CaseId::kB1An: {
      const int k1 = k[0], d = k[1] - k[0];
      return {{{k1, d, 0}, {k1, d - 1, 1}}, {{k1 - 1, d + 1, 1}, {k1 + 1, d - 2, 0}}};
    }
    case CaseId::kB3An: {
      const int a = k[1] - n[1], n2 = n[1];
      return {{{a, n2 - 1, 1}, {a, n2 - 1, 1}}, {{a + 1, n2 - 2, 0}, {a - 1, n2, 2}}};
    }
    case CaseId::kT1An: {
      // The B1 display on levels 2, 3 and the inner level.
      Display b = an_display(CaseId::kB1An, {n[1], n[2]}, {k[1], k[2]});
      for (auto* side : {&b.x, &b.y}) {
        for (auto& p : *side) p.insert(p.begin(), 0);
      }
      return b;
    }
    case CaseId::kT3An: {
      const int k1 = k[0], n3 = n[2], d = k[2] - k[0] - n[2];
      return {{{k1, d, n3 - 1, 1}, {k1, d, n3 - 1, 1}},
              {{k1 + 1, d, n3 - 2, 0}, {k1 - 1, d, n3, 2}}};
    }
    default:
      throw InapplicableCase("not an anti-unanimity display case");
  }
}

// X1 and X2 of the incompleteness lemma, by family and pivot level. The
// second element is the level of g'.
std::pair<Display, int> x1x2_display(Family f, int level,
                                     const std::vector<int>& n,
                                     const std::vector<int>& k) {
  switch (f) {
    case Family::kB1:
      return {{{{k[0] - 1, k[1] - k[0]}, {k[0] - 1, k[1] - k[0]}}, {}}, 2};
    case Family::kB2:
      return {{{{k[0] - 1, 0}, {0, k[0]}}, {}}, 2};
    case Family::kB3:
      return {{{{k[0] - 1, 0}, {k[1] - n[1], n[1] - 1}}, {}}, 2};
    case Family::kT1:
      if (level == 1) {
        return {{{{k[0] - 1, 0, 0}, {0, k[1], k[2] - k[1] - 1}}, {}}, 3};
      }
      return {{{{0, k[1] - 1, k[2] - k[1]}, {0, k[1] - 1, k[2] - k[1]}}, {}},
              3};
    case Family::kT3:
      if (level == 1) {
        return {{{{k[1] - n[1] - 1, n[1], 0}, {k[0] - 1, 0, k[2] - k[0]}}, {}},
                3};
      }
      return {{{{k[1] - n[1], n[1] - 1, 0},
                {k[0], k[2] - k[0] - n[2], n[2] - 1}},
               {}},
              3};
    default:
      throw InapplicableCase("X1X2_An covers B1, B2, B3, T1 and T3");
  }
}

// Keylemma seeds for the unanimity cases, winning coalition first.
Display un_display(Family f, int level, const std::vector<int>& n,
                   const std::vector<int>& k) {
  switch (f) {
    case Family::kB1: {
      const int k1 = k[0], d = k[1] - k[0];
      return {{{k1, d}, {k1 - 1, d}}, {{k1, d - 1}, {k1 - 1, d + 1}}};
    }
    case Family::kB2: {
      const int k1 = k[0];
      return {{{0, k1 + 1}, {k1 - 1, 0}}, {{k1 - 1, 1}, {0, k1}}};
    }
    case Family::kB3: {
      const int a = k[1] - n[1], n2 = n[1], k1 = k[0];
      return {{{a, n2}, {k1 - 1, 0}}, {{a, n2 - 1}, {k1 - 1, 1}}};
    }
    case Family::kT1: {
      const int k1 = k[0], k2 = k[1], e = k[2] - k[1];
      if (level == 1) {
        return {{{0, k2, e}, {k1 - 1, 0, 0}}, {{k1 - 1, 1, 0}, {0, k2 - 1, e}}};
      }
      return {{{k1, 0, 0}, {0, k2 - 1, e}}, {{k1 - 1, 1, 0}, {1, k2 - 2, e}}};
    }
    case Family::kT3: {
      const int k1 = k[0], k2 = k[1], k3 = k[2], n2 = n[1], n3 = n[2];
      if (level == 1) {
        const int d = k3 - k1 - n3;
        return {{{k1, d, n3}, {k1 - 1, d, n3}},
                {{k1, d - 1, n3}, {k1 - 1, d + 1, n3}}};
      }
      return {{{k1, 0, k3 - k1}, {k2 - n2, n2 - 1, 0}},
              {{k2 - n2, n2 - 1, 1}, {k1, 0, k3 - k1 - 1}}};
    }
    default:
      throw InapplicableCase("Un covers B1, B2, B3, T1 and T3");
  }
}

Family required_family(CaseId id) {
  switch (id) {
    case CaseId::kB1Level2:
    case CaseId::kB1An:
      return Family::kB1;
    case CaseId::kB2Level2:
      return Family::kB2;
    case CaseId::kB3Level2:
    case CaseId::kB3An:
      return Family::kB3;
    case CaseId::kT1Level3:
    case CaseId::kT1An:
      return Family::kT1;
    case CaseId::kT3Level3:
    case CaseId::kT3An:
      return Family::kT3;
    default:
      throw InapplicableCase("case has no single family");
  }
}

bool in_b_or_t(Family f) {
  return f == Family::kB1 || f == Family::kB2 || f == Family::kB3 ||
         f == Family::kT1 || f == Family::kT3;
}

}  // namespace

std::string case_name(CaseId id) {
  for (const auto& c : kCases) {
    if (c.id == id) return c.name;
  }
  throw InvalidInput("unknown case");
}

CaseId parse_case(const std::string& name) {
  for (const auto& c : kCases) {
    if (name == c.name) return c.id;
  }
  throw InvalidInput("unknown certificate case '" + name + "'");
}

std::vector<CaseId> all_cases() {
  std::vector<CaseId> out;
  for (const auto& c : kCases) out.push_back(c.id);
  return out;
}

TradingTransform expand_display(const Display& d, const Pools& pools) {
  TradingTransform t;
  std::vector<size_t> cursor(pools.size(), 0);
  for (size_t i = 0; i < d.x.size(); ++i) {
    t.x.push_back(expand_one(d.x[i], pools, cursor, side_name(true, i)));
  }
  std::fill(cursor.begin(), cursor.end(), 0);
  for (size_t i = 0; i < d.y.size(); ++i) {
    t.y.push_back(expand_one(d.y[i], pools, cursor, side_name(false, i)));
  }
  return t;
}

TradingTransform keylemma_lift(const SimpleGame& outer, int pivot,
                               Coalition x1, Coalition x2, Coalition y1,
                               Coalition y2, const SimpleGame& inner,
                               Coalition u) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw PreconditionViolation("keylemma: " + what);
  };
  require(pivot >= 0 && pivot < outer.n(), "pivot outside the outer game");
  const Coalition g = bit(pivot);
  for (Coalition c : {x1, x2, y1, y2}) {
    require(is_subset(c, outer.players()),
            "coalition " + to_string(c) + " outside the outer game");
  }
  require(!(x1 & g), "X1 contains the pivot");
  require(!(x2 & g), "X2 contains the pivot");
  require(!(y1 & g), "Y1 contains the pivot");
  require(!(y2 & g), "Y2 contains the pivot");
  require(is_trading_transform({{x1, x2}, {y1, y2}}),
          "seed is not a trading transform");
  require(is_winning(outer, x1), "X1 is not winning");
  require(is_winning(outer, x2 | g), "X2 is not pivot-winning");
  require(!is_winning(outer, y1), "Y1 is winning");
  require(!is_winning(outer, y2), "Y2 is winning");
  require(std::binary_search(inner.min_winning().begin(),
                             inner.min_winning().end(), u),
          "U is not a minimal winning coalition of the inner game");
  const int m = outer.n();
  auto up = [&](Coalition c) { return embed_outer(c, pivot); };
  if (is_winning(outer, x2)) {
    return {{up(x1), up(x2)}, {up(y1), up(y2)}};
  }
  require(cardinality(u) >= 2, "U has fewer than two players");
  const Coalition u1 = bit(lowest(u)), u2 = u & ~u1;
  return {{up(x1), up(x2) | embed_inner(u, m)},
          {up(y1) | embed_inner(u1, m), up(y2) | embed_inner(u2, m)}};
}

TradingTransform not_complete_certificate(const SimpleGame& outer, int pivot,
                                          const SimpleGame& inner,
                                          Branch branch) {
  if (pivot < 0 || pivot >= outer.n()) {
    throw InvalidInput("pivot outside the outer game");
  }
  if (inner.min_winning().size() < 2) {
    throw InapplicableCase("inner game is an oligarchy");
  }
  const auto wide = wide_minimal(inner);
  if (!wide) throw InapplicableCase("inner game is an anti-oligarchy");
  const int m = outer.n();
  const Coalition g = bit(pivot);
  const Coalition idle = dummies(outer);
  auto up = [&](Coalition c) { return embed_outer(c, pivot); };
  auto in = [&](Coalition c) { return embed_inner(c, m); };
  for (int h = 0; h < m; ++h) {
    if (h == pivot || contains(idle, h)) continue;
    auto witness = strictly_more_desirable(outer, pivot, h);
    if (!witness) continue;
    const Coalition x = *witness & ~g;
    const Coalition gp = bit(h);
    for (Coalition y : outer.min_winning()) {
      if (!contains(y, h)) continue;
      const bool has_g = (y & g) != 0;
      if (branch == Branch::kPivotInY && !has_g) continue;
      if (branch == Branch::kPivotNotInY && has_g) continue;
      if (has_g) {
        const Coalition z1 = inner.min_winning()[0];
        const Coalition z2 = inner.min_winning()[1];
        const Coalition z = bit(lowest(z1 & ~z2));
        return {{up(x) | in(z1), up(y & ~g) | in(z2)},
                {up(x | gp) | in(z1 & ~z), up(y & ~g & ~gp) | in(z2 | z)}};
      }
      const Coalition z = bit(lowest(*wide));
      return {{up(x) | in(*wide), up(y)},
              {up(x | gp) | in(*wide & ~z), up(y & ~gp) | in(z)}};
    }
  }
  throw InapplicableCase(
      "no non-dummy player strictly below the pivot with the requested branch");
}

PaperCertificate certificate_for(CaseId id, const CaseInput& input) {
  const CatalogParams& p = input.outer;
  SimpleGame outer = [&] {
    try {
      return make(p);
    } catch (const ConstraintViolation& e) {
      throw InapplicableCase(e.what());
    }
  }();
  const auto levels = level_blocks(p.n);
  const int m_levels = static_cast<int>(levels.size());
  const bool general = id == CaseId::kNotComplete || id == CaseId::kX1X2An ||
                       id == CaseId::kUn;
  if (!general && p.family != required_family(id)) {
    throw InapplicableCase(case_name(id) + " needs family " +
                           family_name(required_family(id)));
  }
  if (general && id != CaseId::kNotComplete && !in_b_or_t(p.family)) {
    throw InapplicableCase(case_name(id) + " covers B1, B2, B3, T1 and T3");
  }
  int level = input.pivot_level;
  if (level == 0) level = general ? 1 : m_levels;
  if (level < 1 || level > m_levels) {
    throw InapplicableCase("pivot level " + std::to_string(level) +
                           " outside 1.." + std::to_string(m_levels));
  }
  if (!general && level != m_levels) {
    throw InapplicableCase(case_name(id) + " needs the least desirable level");
  }
  if ((id == CaseId::kX1X2An || id == CaseId::kUn) &&
      (level == m_levels || level > 2)) {
    throw InapplicableCase(case_name(id) +
                           " needs level 1, or level 2 of a tripartite game");
  }
  const SimpleGame& inner = input.inner;
  const int pivot = levels[level - 1].back();
  const int outer_n = outer.n();

  // Outer pools without the pivot, in outer indexing.
  Pools outer_pools = levels;
  outer_pools[level - 1].pop_back();

  PaperCertificate cert{id,
                        outer,
                        pivot,
                        inner,
                        compose(outer, pivot, inner),
                        {},
                        CertificateKind::kNonweightedness};

  auto lift = [&](const Display& d) {
    auto u = wide_minimal(inner);
    if (!u) {
      throw InapplicableCase(
          "inner game needs a minimal winning coalition of two or more");
    }
    TradingTransform seed = expand_display(d, outer_pools);
    return keylemma_lift(outer, pivot, seed.x[0], seed.x[1], seed.y[0],
                         seed.y[1], inner, *u);
  };

  switch (id) {
    case CaseId::kB1Level2:
    case CaseId::kB2Level2:
    case CaseId::kB3Level2:
    case CaseId::kT1Level3:
    case CaseId::kT3Level3:
      cert.transform = lift(keylemma_display(id, p.n, p.k));
      break;
    case CaseId::kB1An:
    case CaseId::kB3An:
    case CaseId::kT1An:
    case CaseId::kT3An: {
      if (!is_anti_unanimity(inner)) {
        throw InapplicableCase("inner game must be A_n with n >= 2");
      }
      Pools pools;
      for (const auto& pool : outer_pools) {
        std::vector<int> mapped;
        for (int i : pool) mapped.push_back(i < pivot ? i : i - 1);
        pools.push_back(mapped);
      }
      std::vector<int> inner_pool(inner.n());
      for (int i = 0; i < inner.n(); ++i) inner_pool[i] = outer_n - 1 + i;
      pools.push_back(inner_pool);
      cert.transform = expand_display(an_display(id, p.n, p.k), pools);
      break;
    }
    case CaseId::kNotComplete:
      cert.kind = CertificateKind::kIncompleteness;
      cert.transform =
          not_complete_certificate(outer, pivot, inner, input.branch);
      break;
    case CaseId::kX1X2An: {
      if (!is_anti_unanimity(inner)) {
        throw InapplicableCase("inner game must be A_n with n >= 2");
      }
      cert.kind = CertificateKind::kIncompleteness;
      auto [d, gp_level] = x1x2_display(p.family, level, p.n, p.k);
      const int gp = levels[gp_level - 1].front();
      Pools pools = outer_pools;
      auto& gp_pool = pools[gp_level - 1];
      gp_pool.erase(std::find(gp_pool.begin(), gp_pool.end(), gp));
      Profile x2_rest = d.x[1];
      if (x2_rest[gp_level - 1] < 1) {
        throw PreconditionViolation("X1X2: X2 has no player of the level of g'");
      }
      --x2_rest[gp_level - 1];
      std::vector<size_t> c1(pools.size(), 0), c2(pools.size(), 0);
      const Coalition x1 = expand_one(d.x[0], pools, c1, "X1");
      const Coalition x2 = expand_one(x2_rest, pools, c2, "X2") | bit(gp);
      const Coalition g = bit(pivot), gpb = bit(gp);
      auto require = [](bool ok, const char* what) {
        if (!ok) throw PreconditionViolation(std::string("X1X2: ") + what);
      };
      require(desirability(outer).strictly(pivot, gp),
              "g is not strictly more desirable than g'");
      require(is_winning(outer, x1 | g), "X1 + g is losing");
      require(!is_winning(outer, x1 | gpb), "X1 + g' is winning");
      require(is_winning(outer, x2 | g), "X2 + g is losing");
      require(!is_winning(outer, (x2 & ~gpb) | g), "X2 - g' + g is winning");
      const Coalition a = embed_inner(bit(0), outer_n);
      const Coalition b = embed_inner(bit(1), outer_n);
      auto up = [&](Coalition c) { return embed_outer(c, pivot); };
      cert.transform = {{up(x1) | a, up(x2) | b},
                        {up(x1 | gpb), up(x2 & ~gpb) | a | b}};
      break;
    }
    case CaseId::kUn:
      if (!is_unanimity(inner)) {
        throw InapplicableCase("inner game must be U_n with n >= 2");
      }
      cert.transform = lift(un_display(p.family, level, p.n, p.k));
      break;
  }
  return cert;
}

CertificateCheck validate(const PaperCertificate& cert) {
  return check_certificate(cert.composite, cert.transform, cert.kind);
}

}  // namespace sgames
