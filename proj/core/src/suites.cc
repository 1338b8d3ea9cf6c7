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


#include "sgames/suites.h"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "sgames/canonical.h"
#include "sgames/catalog.h"
#include "sgames/composition.h"
#include "sgames/desirability.h"
#include "sgames/enumerate.h"
#include "sgames/errors.h"
#include "sgames/isomorphism.h"
#include "sgames/paper_certificates.h"
#include "sgames/profile.h"
#include "sgames/trading.h"
#include "sgames/weights.h"

namespace sgames {

namespace {

class Recorder {
 public:
  Recorder(std::string name, const SuiteOptions& opt)
      : cap_(opt.max_examples), start_(std::chrono::steady_clock::now()) {
    out_.name = std::move(name);
  }

  void check(bool ok, const std::function<std::string()>& detail) {
    ++out_.checked;
    if (ok) return;
    ++out_.failed;
    if (static_cast<int>(out_.examples.size()) < cap_) {
      out_.examples.push_back(detail());
    }
  }

  void note(std::string s) { out_.notes.push_back(std::move(s)); }

  CheckOutcome finish() {
    out_.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    return std::move(out_);
  }

 private:
  int cap_;
  std::chrono::steady_clock::time_point start_;
  CheckOutcome out_;
};

std::string show(const SimpleGame& g) { return g.to_string(); }

// Enumerated games on 1..max_n players, without the trivial-full antichain.
std::vector<SimpleGame> population(int max_n, bool allow_five = false) {
  std::vector<SimpleGame> out;
  for (int n = 1; n <= max_n; ++n) {
    for_each_game(
        n,
        [&](const SimpleGame& g) {
          if (!is_trivial_full(g)) out.push_back(g);
        },
        allow_five);
  }
  return out;
}

std::vector<SimpleGame> dummy_free(const std::vector<SimpleGame>& games) {
  std::vector<SimpleGame> out;
  for (const auto& g : games) {
    if (dummies(g) == 0) out.push_back(g);
  }
  return out;
}

// Composite by the definition: S wins when its outer part, plus the pivot
// if its inner part wins the inner game, wins the outer game.
SimpleGame compose_by_definition(const SimpleGame& outer, int pivot,
                                 const SimpleGame& inner) {
  const int m = outer.n() - 1;
  const int n = m + inner.n();
  std::vector<Coalition> winning;
  for (Coalition s = 0; s <= full_set(n); ++s) {
    Coalition x = 0;
    for (int i = 0; i < m; ++i) {
      if (contains(s, i)) x |= bit(i < pivot ? i : i + 1);
    }
    if (is_winning(inner, s >> m)) x |= bit(pivot);
    if (is_winning(outer, x)) winning.push_back(s);
  }
  return SimpleGame::from_winning(n, winning);
}

// Incompleteness by brute force over every pair of winning coalitions.
bool swap_exists(const SimpleGame& g) {
  std::vector<Coalition> winning;
  for (Coalition s = 0; s <= g.players(); ++s) {
    if (is_winning(g, s)) winning.push_back(s);
  }
  for (Coalition x : winning) {
    for (Coalition y : winning) {
      for (int a : members_of(x & ~y)) {
        for (int b : members_of(y & ~x)) {
          if (!is_winning(g, (x & ~bit(a)) | bit(b)) &&
              !is_winning(g, (y & ~bit(b)) | bit(a))) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool is_unanimity(const SimpleGame& g) {
  return g.min_winning().size() == 1 && g.min_winning()[0] == g.players();
}

bool is_anti_unanimity(const SimpleGame& g) {
  return passers(g) == g.players();
}

// H_{n,k} with k the smallest winning size, if the game is one.
std::optional<int> symmetric_threshold(const SimpleGame& g) {
  int k = g.n();
  for (Coalition m : g.min_winning()) k = std::min(k, cardinality(m));
  if (g == make_k_out_of_n(g.n(), k)) return k;
  return std::nullopt;
}

int last_of_level(const CatalogParams& p, int level) {
  return level_blocks(p.n)[level - 1].back();
}

std::vector<CatalogParams> indecomposable_grid(bool with_h) {
  std::vector<CatalogParams> out;
  std::vector<Family> families = {Family::kB1, Family::kB2, Family::kB3,
                                  Family::kT1, Family::kT3};
  if (with_h) families.insert(families.begin(), Family::kH);
  for (Family f : families) {
    for (auto& p : catalog_grid(f, Mode::kIndecomposable)) out.push_back(p);
  }
  return out;
}

struct NamedGame {
  std::string name;
  SimpleGame game;
};

std::vector<NamedGame> small_inners() {
  return {{"A2", make_anti_unanimity(2)},
          {"A3", make_anti_unanimity(3)},
          {"U2", make_unanimity(2)},
          {"U3", make_unanimity(3)},
          {"H(3,2)", make_k_out_of_n(3, 2)}};
}

std::string lp_verdict(const PaperCertificate& c) {
  if (c.kind == CertificateKind::kNonweightedness) {
    return is_weighted(c.composite) ? "LP: weighted" : "LP: not weighted";
  }
  return is_complete(c.composite) ? "LP: complete" : "LP: not complete";
}

// Builds and validates one paper certificate. Returns false when the case
// does not apply; otherwise records the outcome.
bool replay_case(Recorder& r, CaseId id, const CatalogParams& outer, int level,
                 const NamedGame& inner, std::map<std::string, long>& valid,
                 std::map<std::string, long>& total) {
  const std::string where = case_name(id) + " " + to_string(outer) +
                            " level " + std::to_string(level) + " inner " +
                            inner.name;
  std::string failure;
  try {
    PaperCertificate c = certificate_for(id, {outer, level, inner.game});
    CertificateCheck v = validate(c);
    if (!v.valid) failure = "rejected (" + v.reason + "); " + lp_verdict(c);
  } catch (const InapplicableCase&) {
    return false;
  } catch (const UnrealizableDisplay& e) {
    const SimpleGame g = compose(make(outer, Mode::kIndecomposable),
                                 last_of_level(outer, level), inner.game);
    failure = std::string("unrealizable display (") + e.what() + "); " +
              (is_weighted(g) ? "LP: weighted" : "LP: not weighted");
  } catch (const UndefinedDisplay& e) {
    const SimpleGame g = compose(make(outer, Mode::kIndecomposable),
                                 last_of_level(outer, level), inner.game);
    failure = std::string("undefined display (") + e.what() + "); " +
              (is_weighted(g) ? "LP: weighted" : "LP: not weighted");
  } catch (const Error& e) {
    failure = std::string("error (") + e.what() + ")";
  }
  ++total[case_name(id)];
  if (failure.empty()) ++valid[case_name(id)];
  r.check(failure.empty(), [&] { return where + ": " + failure; });
  return true;
}

void case_notes(Recorder& r, const std::map<std::string, long>& valid,
                const std::map<std::string, long>& total) {
  for (const auto& [name, t] : total) {
    auto it = valid.find(name);
    const long v = it == valid.end() ? 0 : it->second;
    r.note(name + ": " + std::to_string(v) + " of " + std::to_string(t) +
           " certificates validate");
  }
}

void replay_cases(Recorder& r, const std::vector<CaseId>& ids) {
  std::map<std::string, long> valid, total;
  const auto inners = small_inners();
  for (CaseId id : ids) {
    for (const auto& p : indecomposable_grid(false)) {
      for (int level = 1; level <= static_cast<int>(p.n.size()); ++level) {
        for (const auto& inner : inners) {
          replay_case(r, id, p, level, inner, valid, total);
        }
      }
    }
  }
  case_notes(r, valid, total);
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

SimpleGame make_unsc() {
  std::vector<Coalition> mw;
  for (Coalition e = 0; e < (Coalition{1} << 10); ++e) {
    if (cardinality(e) == 4) mw.push_back(full_set(5) | (e << 5));
  }
  return SimpleGame(15, mw);
}

CheckOutcome check_elgot(const SuiteOptions& opt) {
  Recorder r("elgot", opt);
  long weighted = 0, short_certs = 0;
  for (int n = 1; n <= opt.n; ++n) {
    for (const auto& g : enumerate_games(n, opt.allow_five)) {
      const bool w = is_weighted(g);
      weighted += w;
      auto rep = synthesize_weights(g);
      r.check(rep.has_value() == w, [&] {
        return show(g) + ": synthesis and feasibility disagree";
      });
      if (rep) {
        r.check(verify_representation(g, *rep), [&] {
          return show(g) + ": representation " + to_string(*rep) +
                 " rejected";
        });
      }
      r.check(!w || is_complete(g),
              [&] { return show(g) + ": weighted but not complete"; });
      auto found = search_certificate(g, 4);
      short_certs += found.has_value();
      r.check(!(found && w), [&] {
        return show(g) + ": certificate " + to_string(*found) +
               " found for a weighted game";
      });
      if (w) {
        bool refused = false;
        try {
          farkas_certificate(g);
        } catch (const PreconditionViolation&) {
          refused = true;
        }
        r.check(refused, [&] {
          return show(g) + ": Farkas certificate for a weighted game";
        });
      } else {
        TradingTransform t = farkas_certificate(g);
        r.check(is_certificate_of_nonweightedness(g, t), [&] {
          return show(g) + ": Farkas certificate " + to_string(t) +
                 " rejected";
        });
      }
    }
  }
  r.note(std::to_string(weighted) + " weighted games; " +
         std::to_string(short_certs) +
         " games with a certificate of length at most 4");
  return r.finish();
}

CheckOutcome check_unsc(const SuiteOptions& opt) {
  Recorder r("unsc", opt);
  const SimpleGame g = make_unsc();
  WeightedRepresentation rep;
  rep.quota = 39;
  IntegerForm form{39, {}};
  for (int i = 0; i < 15; ++i) {
    const int w = i < 5 ? 7 : 1;
    rep.weights.push_back(w);
    form.weights.push_back(w);
  }
  rep.integer_form = form;
  r.check(verify_representation(g, rep),
          [] { return std::string("[39; 7^5, 1^10] rejected"); });
  std::vector<Coalition> by_weight;
  for (Coalition s = 0; s <= g.players(); ++s) {
    if (7 * cardinality(s & full_set(5)) + cardinality(s >> 5) >= 39) {
      by_weight.push_back(s);
    }
  }
  const SimpleGame weighed = SimpleGame::from_winning(15, by_weight);
  r.check(weighed == g, [&] {
    return "weights define " + show(weighed) + " instead of the council";
  });
  r.check(g.min_winning().size() == 210, [&] {
    return std::to_string(g.min_winning().size()) + " minimal winning";
  });
  for (Coalition m : g.min_winning()) {
    r.check(is_subset(full_set(5), m) && cardinality(m >> 5) == 4,
            [&] { return "minimal winning " + to_string(m); });
  }
  const auto levels = desirability_levels(g);
  const std::vector<std::vector<int>> expect = {
      {0, 1, 2, 3, 4}, {5, 6, 7, 8, 9, 10, 11, 12, 13, 14}};
  r.check(levels == expect,
          [] { return std::string("desirability levels differ"); });
  r.check(desirability(g).strictly(0, 5),
          [] { return std::string("permanent not strictly above elected"); });
  auto synth = synthesize_weights(g);
  r.check(synth && verify_representation(g, *synth),
          [] { return std::string("synthesized weights rejected"); });
  if (synth) r.note("synthesized " + to_string(*synth));
  return r.finish();
}

CheckOutcome check_completeness(const SuiteOptions& opt) {
  Recorder r("completeness", opt);
  long complete = 0;
  for (int n = 1; n <= opt.n; ++n) {
    for (const auto& g : enumerate_games(n, opt.allow_five)) {
      const bool c = is_complete(g);
      complete += c;
      r.check(c == !swap_exists(g), [&] {
        return show(g) + ": preorder and swap search disagree";
      });
      r.check(c == !find_swap_certificate(g).has_value(), [&] {
        return show(g) + ": minimal-pair swap search disagrees";
      });
      if (auto t = incompleteness_certificate(g)) {
        r.check(is_certificate_of_incompleteness(g, *t), [&] {
          return show(g) + ": certificate " + to_string(*t) + " rejected";
        });
      }
    }
  }
  r.note(std::to_string(complete) + " complete games");
  return r.finish();
}

CheckOutcome check_composition_laws(const SuiteOptions& opt) {
  Recorder r("composition laws", opt);
  const auto pool = population(std::min(opt.n, 4));
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](size_t m) {
    return std::uniform_int_distribution<size_t>(0, m - 1)(rng);
  };
  auto laws = [&](const SimpleGame& outer, int pivot, const SimpleGame& inner,
                  const SimpleGame& composite) {
    const SimpleGame direct = compose_by_definition(outer, pivot, inner);
    r.check(direct == composite, [&] {
      return show(outer) + " o_" + std::to_string(pivot) + " " + show(inner) +
             ": formula " + show(composite) + ", definition " + show(direct);
    });
    const bool free = dummies(composite) == 0;
    const bool parts = dummies(outer) == 0 && dummies(inner) == 0;
    r.check(free == parts, [&] {
      return show(outer) + " o_" + std::to_string(pivot) + " " + show(inner) +
             ": dummy preservation fails";
    });
  };
  for (int t = 0; t < opt.triples; ++t) {
    const SimpleGame& g = pool[pick(pool.size())];
    const SimpleGame& h = pool[pick(pool.size())];
    const SimpleGame& k = pool[pick(pool.size())];
    const int gp = static_cast<int>(pick(g.n()));
    const int hp = static_cast<int>(pick(h.n()));
    const SimpleGame gh = compose(g, gp, h);
    const SimpleGame hk = compose(h, hp, k);
    const SimpleGame left = compose(gh, g.n() - 1 + hp, k);
    const SimpleGame right = compose(g, gp, hk);
    r.check(isomorphic(left, right).has_value(), [&] {
      return "(" + show(g) + " o " + show(h) + ") o " + show(k) +
             " not isomorphic to the right grouping";
    });
    laws(g, gp, h, gh);
    laws(h, hp, k, hk);
    laws(gh, g.n() - 1 + hp, k, left);
    laws(g, gp, hk, right);
  }
  r.note(std::to_string(opt.triples) + " triples, seed " +
         std::to_string(opt.seed));
  return r.finish();
}

CheckOutcome check_weighted_compositions(const SuiteOptions& opt) {
  Recorder r("weighted compositions", opt);
  long decomposable = 0;
  for (const auto& g : population(std::min(opt.n, 4))) {
    if (!is_weighted(g)) continue;
    for (const auto& d : find_decompositions(g)) {
      ++decomposable;
      r.check(is_weighted(d.outer) && is_weighted(d.inner), [&] {
        return show(g) + " = " + show(d.outer) + " o_" +
               std::to_string(d.pivot) + " " + show(d.inner) +
               ": a component is not weighted";
      });
    }
  }
  const auto small = population(3);
  for (const auto& g : small) {
    for (const auto& h : small) {
      for (int p = 0; p < g.n(); ++p) {
        if (contains(dummies(g), p)) continue;
        if (!is_weighted(compose(g, p, h))) continue;
        r.check(is_weighted(g) && is_weighted(h), [&] {
          return show(g) + " o_" + std::to_string(p) + " " + show(h) +
                 " is weighted but a component is not";
        });
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const SimpleGame head = make_k_out_of_n(n, k);
      for (const auto& g : small) {
        if (!is_weighted(g)) continue;
        const SimpleGame c = compose(head, n - 1, g);
        auto rep = synthesize_weights(c);
        r.check(rep && verify_representation(c, *rep), [&] {
          return "H(" + std::to_string(n) + "," + std::to_string(k) +
                 ") o " + show(g) + " is not weighted";
        });
      }
    }
  }
  r.note(std::to_string(decomposable) +
         " decompositions of weighted games inspected");
  return r.finish();
}

namespace {

int outer_index(int x, int pivot) { return x < pivot ? x : x - 1; }

void transfer_clauses(Recorder& r, const SimpleGame& g, int pivot,
                      const SimpleGame& h, const std::string& name) {
  const SimpleGame c = compose(g, pivot, h);
  const auto rg = desirability(g), rh = desirability(h), rc = desirability(c);
  const int off = g.n() - 1;
  r.check(is_complete(c), [&] { return name + ": composite not complete"; });
  for (int x = 0; x < g.n(); ++x) {
    if (x == pivot) continue;
    for (int y = 0; y < g.n(); ++y) {
      if (y == pivot) continue;
      const int a = outer_index(x, pivot), b = outer_index(y, pivot);
      r.check(rg.geq(x, y) == rc.geq(a, b), [&] {
        return name + ": outer order differs at " + std::to_string(x) + "," +
               std::to_string(y);
      });
    }
  }
  for (int x = 0; x < h.n(); ++x) {
    for (int y = 0; y < h.n(); ++y) {
      r.check(rh.geq(x, y) == rc.geq(off + x, off + y), [&] {
        return name + ": inner order differs at " + std::to_string(x) + "," +
               std::to_string(y);
      });
    }
  }
  const Coalition special = passers(h) | vetoers(h);
  for (int x = 0; x < g.n(); ++x) {
    if (x == pivot) continue;
    const int a = outer_index(x, pivot);
    for (int y = 0; y < h.n(); ++y) {
      const bool strict = !contains(special, y);
      r.check(strict ? rc.strictly(a, off + y) : rc.geq(a, off + y), [&] {
        return name + ": outer " + std::to_string(x) + " vs inner " +
               std::to_string(y);
      });
    }
  }
}

void not_complete_instance(Recorder& r, const SimpleGame& g, int pivot,
                           const SimpleGame& h, const std::string& name) {
  const SimpleGame c = compose(g, pivot, h);
  r.check(!is_complete(c), [&] { return name + ": composite is complete"; });
  for (Branch b : {Branch::kAny, Branch::kPivotInY, Branch::kPivotNotInY}) {
    std::string failure;
    try {
      TradingTransform t = not_complete_certificate(g, pivot, h, b);
      CertificateCheck v =
          check_certificate(c, t, CertificateKind::kIncompleteness);
      if (!v.valid) failure = v.reason;
    } catch (const InapplicableCase&) {
      if (b != Branch::kAny) continue;
      failure = "no certificate";
    } catch (const Error& e) {
      failure = e.what();
    }
    r.check(failure.empty(),
            [&] { return name + ": certificate fails (" + failure + ")"; });
  }
}

bool lemma_inner(const SimpleGame& h) {
  return dummies(h) == 0 && !is_unanimity(h) && !is_anti_unanimity(h);
}

}  // namespace

CheckOutcome check_desirability_transfer(const SuiteOptions& opt) {
  Recorder r("desirability transfer", opt);
  const auto small = dummy_free(population(3));
  std::vector<SimpleGame> complete_small, lemma_inners;
  for (const auto& h : small) {
    if (is_complete(h)) complete_small.push_back(h);
    if (lemma_inner(h)) lemma_inners.push_back(h);
  }
  long lemma = 0, theorem = 0;
  for (const auto& g : small) {
    const auto rel = desirability(g);
    for (int p = 0; p < g.n(); ++p) {
      bool above = false;
      for (int q = 0; q < g.n(); ++q) above |= rel.strictly(p, q);
      if (!above) continue;
      for (const auto& h : lemma_inners) {
        ++lemma;
        not_complete_instance(r, g, p, h,
                              show(g) + " o_" + std::to_string(p) + " " +
                                  show(h));
      }
    }
    if (!is_complete(g)) continue;
    const auto levels = desirability_levels(g);
    for (int p : levels.back()) {
      for (const auto& h : complete_small) {
        ++theorem;
        transfer_clauses(r, g, p, h,
                         show(g) + " o_" + std::to_string(p) + " " + show(h));
      }
    }
  }
  for (const auto& p : indecomposable_grid(false)) {
    const SimpleGame g = make(p, Mode::kIndecomposable);
    const int levels = static_cast<int>(p.n.size());
    for (int l = 1; l < levels; ++l) {
      for (const auto& h : lemma_inners) {
        ++lemma;
        not_complete_instance(r, g, last_of_level(p, l), h,
                              to_string(p) + " level " + std::to_string(l) +
                                  " o " + show(h));
      }
    }
    for (const auto& h : complete_small) {
      ++theorem;
      transfer_clauses(r, g, last_of_level(p, levels), h,
                       to_string(p) + " least level o " + show(h));
    }
  }
  r.note(std::to_string(lemma) + " incompleteness instances, " +
         std::to_string(theorem) + " least-pivot instances");
  return r.finish();
}

CheckOutcome check_k_out_of_n(const SuiteOptions& opt) {
  Recorder r("k-out-of-n heads", opt);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k < n; ++k) {
      r.check(find_decompositions(make_k_out_of_n(n, k), 1).empty(), [&] {
        return "H(" + std::to_string(n) + "," + std::to_string(k) +
               ") decomposes";
      });
    }
  }
  const auto small = dummy_free(population(3));
  long trips = 0;
  auto round_trip = [&](int n, int k, const SimpleGame& residual) {
    const bool unanimity = k == n;
    const SimpleGame c = compose(make_k_out_of_n(n, k), n - 1, residual);
    const std::string name = "H(" + std::to_string(n) + "," +
                             std::to_string(k) + ") o " + show(residual);
    long matches = 0;
    for (const auto& d : find_decompositions(c)) {
      auto kk = symmetric_threshold(d.outer);
      if (!kk) continue;
      if (unanimity != (*kk == d.outer.n())) continue;
      const Coalition excluded =
          unanimity ? vetoers(d.inner) : passers(d.inner);
      if (excluded != 0) continue;
      ++matches;
      r.check(d.outer.n() == n && *kk == k &&
                  isomorphic(d.inner, residual).has_value(),
              [&] {
                return name + ": also " + show(d.outer) + " o " +
                       show(d.inner);
              });
    }
    ++trips;
    r.check(matches > 0, [&] { return name + ": factorization not found"; });
  };
  for (const auto& g : small) {
    if (g.n() < 2) continue;
    for (int n = 2; n <= 4; ++n) {
      if (passers(g) == 0) {
        for (int k = 1; k < n; ++k) round_trip(n, k, g);
      }
      if (vetoers(g) == 0) round_trip(n, n, g);
    }
  }
  r.note(std::to_string(trips) + " head round trips");
  return r.finish();
}

CheckOutcome check_catalog(const SuiteOptions& opt) {
  Recorder r("catalog", opt);
  for (const auto& p : indecomposable_grid(true)) {
    const SimpleGame g = make(p, Mode::kIndecomposable);
    const std::string name = to_string(p);
    r.check(is_weighted(g), [&] { return name + " not weighted"; });
    r.check(is_complete(g), [&] { return name + " not complete"; });
    r.check(is_indecomposable(g), [&] { return name + " decomposes"; });
    auto tag = classify(g);
    r.check(tag && *tag == p, [&] { return name + " misclassified"; });
  }
  // B1 with k2 - k1 = n2 - 1 = 1 factors as H(n1+1, k1+1) o A2.
  for (const auto& p : catalog_grid(Family::kB1, Mode::kFull)) {
    if (p.n[1] != 2) continue;
    const SimpleGame g = make(p);
    const SimpleGame f = compose(make_k_out_of_n(p.n[0] + 1, p.k[0] + 1),
                                 p.n[0], make_anti_unanimity(2));
    r.check(isomorphic(f, g).has_value() && !is_indecomposable(g), [&] {
      return to_string(p) + " is not H(n1+1,k1+1) o A2";
    });
  }
  // Unanimity and anti-unanimity chains.
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      r.check(isomorphic(compose(make_unanimity(n), 0, make_unanimity(m)),
                         make_unanimity(n + m - 1))
                  .has_value(),
              [&] { return "U" + std::to_string(n) + " o U" +
                           std::to_string(m); });
      r.check(isomorphic(compose(make_anti_unanimity(n), 0,
                                 make_anti_unanimity(m)),
                         make_anti_unanimity(n + m - 1))
                  .has_value(),
              [&] { return "A" + std::to_string(n) + " o A" +
                           std::to_string(m); });
    }
  }
  r.check(is_indecomposable(make_unanimity(2)) &&
              is_indecomposable(make_anti_unanimity(2)),
          [] { return std::string("U2 or A2 decomposes"); });
  for (int n = 3; n <= 5; ++n) {
    r.check(!is_indecomposable(make_unanimity(n)) &&
                !is_indecomposable(make_anti_unanimity(n)),
            [&] { return "U" + std::to_string(n) + " or A" +
                         std::to_string(n) + " is indecomposable"; });
  }
  // T2 as a bipartite outer game composed over a level-2 player with
  // H(n3, k3 - k2).
  long t2 = 0, t2_ok = 0;
  for (const auto& p : catalog_grid(Family::kT2, Mode::kFull)) {
    const auto& n = p.n;
    const auto& k = p.k;
    CompleteProfile outer{{n[0], n[1] + 1},
                          {{k[1] - n[1], n[1] + 1}, {k[0], 0}}};
    std::sort(outer.shift_min.rbegin(), outer.shift_min.rend());
    const SimpleGame g = make(p);
    bool ok = false;
    std::string why;
    try {
      const SimpleGame f = compose(from_profile(outer), n[0] + n[1],
                                   make_k_out_of_n(n[2], k[2] - k[1]));
      ok = isomorphic(f, g).has_value();
      if (!ok) why = "factorization differs";
    } catch (const Error& e) {
      why = e.what();
    }
    const bool decomposes = !is_indecomposable(g);
    if (!decomposes) why += why.empty() ? "indecomposable" : "; indecomposable";
    ++t2;
    t2_ok += ok && decomposes;
    r.check(ok && decomposes, [&] { return to_string(p) + ": " + why; });
  }
  r.note("T2: " + std::to_string(t2_ok) + " of " + std::to_string(t2) +
         " instances decompose as stated");
  return r.finish();
}

CheckOutcome check_when_weighted(const SuiteOptions& opt) {
  Recorder r("when weighted", opt);
  std::vector<NamedGame> inners = small_inners();
  for (Family f : {Family::kB1, Family::kB2, Family::kB3}) {
    const CatalogParams p = catalog_grid(f, Mode::kIndecomposable).front();
    inners.push_back({to_string(p), make(p, Mode::kIndecomposable)});
  }
  long weighted = 0, total = 0;
  for (const auto& p : indecomposable_grid(true)) {
    const SimpleGame g = make(p, Mode::kIndecomposable);
    for (int level = 1; level <= static_cast<int>(p.n.size()); ++level) {
      for (const auto& inner : inners) {
        const SimpleGame c = compose(g, last_of_level(p, level), inner.game);
        const bool expect =
            p.family == Family::kH ||
            (p.family == Family::kB2 && level == 2 &&
             is_anti_unanimity(inner.game));
        const bool w = is_weighted(c);
        const bool rec = recognize_ideal_weighted(c);
        ++total;
        weighted += w;
        const std::string name = to_string(p) + " level " +
                                 std::to_string(level) + " o " + inner.name;
        r.check(w == expect, [&] {
          return name + ": LP says " + (w ? "weighted" : "not weighted");
        });
        r.check(rec == expect, [&] {
          return name + ": recognized " + (rec ? "true" : "false");
        });
      }
    }
  }
  r.note(std::to_string(weighted) + " of " + std::to_string(total) +
         " compositions weighted");
  replay_cases(r, all_cases());
  return r.finish();
}

namespace {

int form_size(const CanonicalForm& f) {
  int size = 1;
  for (const auto& h : f.heads) size += h.n[0] - 1;
  if (f.core) {
    int core = 0;
    for (int v : f.core->n) core += v;
    size += core - 1;
    if (f.tail) size += *f.tail - 1;
  }
  return size;
}

std::vector<CanonicalForm> canonical_grid(int max_players) {
  const auto heads = catalog_grid(Family::kH, Mode::kIndecomposable);
  std::vector<std::vector<CatalogParams>> head_seqs = {{}};
  for (const auto& a : heads) {
    head_seqs.push_back({a});
    for (const auto& b : heads) head_seqs.push_back({a, b});
  }
  std::vector<std::pair<std::optional<CatalogParams>, std::optional<int>>>
      cores = {{std::nullopt, std::nullopt}};
  for (const auto& p : indecomposable_grid(false)) {
    cores.push_back({p, std::nullopt});
    if (p.family == Family::kB2) {
      for (int t = 2; t <= 3; ++t) cores.push_back({p, t});
    }
  }
  std::vector<CanonicalForm> out;
  for (const auto& hs : head_seqs) {
    for (const auto& [core, tail] : cores) {
      CanonicalForm f{hs, core, tail};
      if (hs.empty() && !core) continue;
      if (form_size(f) > max_players || form_violation(f)) continue;
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace

CheckOutcome check_canonical_forms(const SuiteOptions& opt) {
  Recorder r("canonical forms", opt);
  std::map<int, std::vector<SimpleGame>> ideal_by_size;
  for (const auto& f : canonical_grid(12)) {
    const SimpleGame g = build_from_canonical(f);
    const std::string name = to_string(f);
    r.check(is_complete(g) && is_weighted(g),
            [&] { return name + ": not weighted"; });
    auto back = canonical_decompose(g);
    r.check(back && *back == f, [&] {
      return name + ": decomposes as " + (back ? to_string(*back) : "none");
    });
    r.check(verify_uniqueness(g),
            [&] { return name + ": decomposition paths disagree"; });
    ideal_by_size[g.n()].push_back(g);
  }
  long pairs = 0;
  for (const auto& p : catalog_grid(Family::kB2, Mode::kIndecomposable)) {
    for (int t = 2; t <= 4; ++t) {
      const SimpleGame b = compose(make(p, Mode::kIndecomposable),
                                   last_of_level(p, 2),
                                   make_anti_unanimity(t));
      for (const auto& h : catalog_grid(Family::kH, Mode::kIndecomposable)) {
        const int need = b.n() - h.n[0] + 1;
        for (const auto& g : ideal_by_size[need]) {
          ++pairs;
          const SimpleGame c = compose(make(h), h.n[0] - 1, g);
          r.check(!isomorphic(c, b).has_value(), [&] {
            return to_string(h) + " o " + show(g) + " isomorphic to " +
                   to_string(p) + " o A" + std::to_string(t);
          });
        }
      }
    }
  }
  r.note(std::to_string(pairs) + " separation pairs");
  return r.finish();
}

CheckOutcome check_appendix(const SuiteOptions& opt) {
  Recorder r("appendix", opt);
  long d1 = 0, d2 = 0;
  std::vector<int> n(3), k(3);
  for (n[0] = 1; n[0] <= 4; ++n[0])
    for (n[1] = 1; n[1] <= 4; ++n[1])
      for (n[2] = 1; n[2] <= 4 && n[0] + n[1] + n[2] <= 10; ++n[2])
        for (k[0] = 1; k[0] <= 6; ++k[0])
          for (k[1] = 1; k[1] <= 6; ++k[1])
            for (k[2] = 1; k[2] <= 6; ++k[2]) {
              const std::string at = "n=(" + std::to_string(n[0]) + "," +
                                     std::to_string(n[1]) + "," +
                                     std::to_string(n[2]) + ") k=(" +
                                     std::to_string(k[0]) + "," +
                                     std::to_string(k[1]) + "," +
                                     std::to_string(k[2]) + ")";
              ++d1;
              r.check(delta1_conditions_iff_tripartite(n, k),
                      [&] { return "Delta1 " + at; });
              if (n[1] <= k[1] - k[0]) {
                ++d2;
                r.check(delta2_conditions_iff_tripartite(n, k),
                        [&] { return "Delta2 " + at; });
              }
            }
  r.note(std::to_string(d1) + " Delta1 points, " + std::to_string(d2) +
         " Delta2 points");
  replay_cases(r, {CaseId::kX1X2An, CaseId::kB1An, CaseId::kB3An,
                   CaseId::kT1An, CaseId::kT3An, CaseId::kUn});
  return r.finish();
}

std::vector<std::string> suite_names() {
  return {"elgot",        "completeness", "composition", "theorem-when",
          "main-theorem", "appendix",     "census"};
}

CensusRecord census_record(const SimpleGame& g) {
  CensusRecord rec;
  rec.id = show(g);
  rec.iso_class = g.n() <= 8 ? canonical_key(g) : "";
  rec.n = g.n();
  rec.trivial_full = is_trivial_full(g);
  rec.complete = is_complete(g);
  rec.weighted = is_weighted(g);
  rec.indecomposable = is_indecomposable(g);
  rec.dummies = dummies(g) != 0;
  if (rec.complete) {
    if (auto tag = classify(g)) rec.catalog = to_string(*tag);
  }
  if (rec.trivial_full) {
    rec.canonical = "trivial-full";
  } else if (rec.dummies) {
    rec.canonical = "dummies present";
  } else {
    CanonicalOutcome out = canonical_analysis(g);
    rec.recognized = out.form.has_value();
    rec.canonical = out.form ? to_string(*out.form) : out.reason;
  }
  return rec;
}

std::vector<CensusRecord> census(const SuiteOptions& opt) {
  std::vector<CensusRecord> out;
  for (const auto& g : enumerate_games(opt.n, opt.allow_five)) {
    out.push_back(census_record(g));
  }
  return out;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "id,iso_class,n,trivial_full,complete,weighted,indecomposable,"
        "dummies,catalog,recognized,canonical\n";
  for (const auto& r : records) {
    os << quote(r.id) << ',' << quote(r.iso_class) << ',' << r.n << ','
       << r.trivial_full << ',' << r.complete << ',' << r.weighted << ','
       << r.indecomposable << ',' << r.dummies << ',' << quote(r.catalog)
       << ',' << r.recognized << ',' << quote(r.canonical) << '\n';
  }
  return os.str();
}

namespace {

CheckOutcome check_census(const SuiteOptions& opt,
                          const std::vector<CensusRecord>& records) {
  Recorder r("census", opt);
  long logged = 0, weighted_not_ideal = 0;
  for (const auto& rec : records) {
    r.check(!rec.weighted || rec.complete,
            [&] { return rec.id + ": weighted but not complete"; });
    r.check(!rec.recognized || rec.weighted,
            [&] { return rec.id + ": recognized but not weighted"; });
    if (rec.weighted && !rec.recognized && !rec.dummies && !rec.trivial_full) {
      ++weighted_not_ideal;
      r.note(rec.id + ": weighted, not ideal");
    }
    if (rec.indecomposable && rec.weighted && !rec.dummies &&
        !rec.trivial_full && rec.catalog.empty()) {
      ++logged;
      r.note(rec.id + ": indecomposable weighted, not in the catalog");
    }
  }
  r.note(std::to_string(records.size()) + " records; " +
         std::to_string(weighted_not_ideal) + " weighted but not ideal; " +
         std::to_string(logged) + " indecomposable outside the catalog");
  return r.finish();
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteReport rep{name, {}, {}};
  if (name == "elgot") {
    rep.checks = {check_elgot(opt), check_unsc(opt)};
  } else if (name == "completeness") {
    rep.checks = {check_completeness(opt)};
  } else if (name == "composition") {
    rep.checks = {check_composition_laws(opt),
                  check_weighted_compositions(opt),
                  check_desirability_transfer(opt), check_k_out_of_n(opt)};
  } else if (name == "theorem-when") {
    rep.checks = {check_catalog(opt), check_when_weighted(opt)};
  } else if (name == "main-theorem") {
    rep.checks = {check_canonical_forms(opt)};
  } else if (name == "appendix") {
    rep.checks = {check_appendix(opt)};
  } else if (name == "census") {
    rep.census = census(opt);
    rep.checks = {check_census(opt, rep.census)};
  } else {
    throw InvalidInput("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace sgames
