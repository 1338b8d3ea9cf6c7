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

#include "sgames/isomorphism.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sgames/desirability.h"
#include "sgames/errors.h"
#include "sgames/profile.h"

namespace sgames {

namespace {

using Signature = std::vector<int>;

std::vector<Signature> signatures(const SimpleGame& g) {
  std::vector<Signature> sig(g.n(), Signature(g.n() + 1, 0));
  for (Coalition m : g.min_winning()) {
    int s = cardinality(m);
    for (int i : members_of(m)) ++sig[i][s];
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const SimpleGame& a, const SimpleGame& b)
      : a_(a),
        b_(b),
        sig_a_(signatures(a)),
        sig_b_(signatures(b)),
        rel_b_(desirability(b)),
        target_(b.min_winning().begin(), b.min_winning().end()) {
    order_.resize(a.n());
    std::iota(order_.begin(), order_.end(), 0);
    // Players with rare signatures first.
    std::vector<int> freq(a.n(), 0);
    for (int i = 0; i < a.n(); ++i) {
      for (int j = 0; j < a.n(); ++j) freq[i] += sig_a_[i] == sig_a_[j];
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return freq[x] < freq[y]; });
    std::vector<int> depth(a.n());
    for (int d = 0; d < a.n(); ++d) depth[order_[d]] = d;
    closing_.resize(a.n());
    for (Coalition m : a.min_winning()) {
      int last = 0;
      for (int i : members_of(m)) last = std::max(last, depth[i]);
      closing_[last].push_back(m);
    }
    sigma_.assign(a.n(), -1);
  }

  std::optional<std::vector<int>> run() {
    if (search(0)) return sigma_;
    return std::nullopt;
  }

 private:
  bool search(int d) {
    if (d == a_.n()) return true;
    const int p = order_[d];
    std::vector<int> tried;
    for (int q = 0; q < b_.n(); ++q) {
      if (used_ & bit(q) || sig_b_[q] != sig_a_[p]) continue;
      bool redundant = false;
      for (int t : tried) {
        if (rel_b_.equivalent(t, q)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(q);
      sigma_[p] = q;
      used_ |= bit(q);
      if (consistent(d) && search(d + 1)) return true;
      used_ &= ~bit(q);
      sigma_[p] = -1;
    }
    return false;
  }

  bool consistent(int d) const {
    for (Coalition m : closing_[d]) {
      Coalition image = 0;
      for (int i : members_of(m)) image |= bit(sigma_[i]);
      if (!target_.count(image)) return false;
    }
    return true;
  }

  const SimpleGame& a_;
  const SimpleGame& b_;
  std::vector<Signature> sig_a_, sig_b_;
  DesirabilityRelation rel_b_;
  std::unordered_set<Coalition> target_;
  std::vector<int> order_;
  std::vector<std::vector<Coalition>> closing_;
  std::vector<int> sigma_;
  Coalition used_ = 0;
};

std::vector<int> size_histogram(const SimpleGame& g) {
  std::vector<int> h(g.n() + 1, 0);
  for (Coalition m : g.min_winning()) ++h[cardinality(m)];
  return h;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const SimpleGame& a,
                                           const SimpleGame& b) {
  if (a.n() != b.n() || a.min_winning().size() != b.min_winning().size()) {
    return std::nullopt;
  }
  if (size_histogram(a) != size_histogram(b)) return std::nullopt;
  auto sa = signatures(a), sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  const bool ca = is_complete(a), cb = is_complete(b);
  if (ca != cb) return std::nullopt;
  if (ca) {
    if (to_profile(a) != to_profile(b)) return std::nullopt;
    auto la = desirability_levels(a), lb = desirability_levels(b);
    std::vector<int> sigma(a.n());
    for (size_t l = 0; l < la.size(); ++l) {
      for (size_t k = 0; k < la[l].size(); ++k) sigma[la[l][k]] = lb[l][k];
    }
    return sigma;
  }
  return Matcher(a, b).run();
}

std::string canonical_key(const SimpleGame& game) {
  if (game.n() > 8) throw InvalidInput("canonical_key supports n <= 8");
  std::vector<int> sigma(game.n());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Coalition> best;
  do {
    std::vector<Coalition> image;
    image.reserve(game.min_winning().size());
    for (Coalition m : game.min_winning()) {
      image.push_back(map_coalition(m, sigma));
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::string key = std::to_string(game.n()) + ":";
  for (size_t i = 0; i < best.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(best[i]);
  }
  return key;
}

}  // namespace sgames
