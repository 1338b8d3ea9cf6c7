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

#include "simplex.h"

#include "sgames/errors.h"

namespace sgames::internal {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a,
          const std::vector<Rational>& b)
      : m_(a.size()), cols_(a.empty() ? 0 : a[0].size()) {
    width_ = cols_ + m_;
    rows_.assign(m_, std::vector<Rational>(width_));
    rhs_ = b;
    basis_.resize(m_);
    reduced_.assign(width_, 0);
    for (size_t i = 0; i < m_; ++i) {
      if (a[i].size() != cols_) throw InvalidInput("ragged constraint matrix");
      if (sgn(b[i]) < 0) throw InvalidInput("phase one needs b >= 0");
      for (size_t j = 0; j < cols_; ++j) {
        rows_[i][j] = a[i][j];
        reduced_[j] -= a[i][j];
      }
      rows_[i][cols_ + i] = 1;
      basis_[i] = cols_ + i;
      objective_ += b[i];
    }
  }

  // Runs to optimality; Bland's rule rules out cycling.
  void solve() {
    while (true) {
      size_t enter = width_;
      for (size_t j = 0; j < width_; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return;
      size_t leave = m_;
      Rational best;
      for (size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // The phase-one objective is bounded below by zero.
      if (leave == m_) throw Error("phase one reported unbounded");
      pivot(leave, enter);
    }
  }

  PhaseOneResult result() const {
    PhaseOneResult r;
    r.feasible = sgn(objective_) == 0;
    if (r.feasible) {
      r.x.assign(cols_, 0);
      for (size_t i = 0; i < m_; ++i) {
        if (basis_[i] < cols_) r.x[basis_[i]] = rhs_[i];
      }
    } else {
      r.ray.resize(m_);
      for (size_t i = 0; i < m_; ++i) r.ray[i] = 1 - reduced_[cols_ + i];
    }
    return r;
  }

 private:
  void pivot(size_t r, size_t c) {
    Rational p = rows_[r][c];
    std::vector<size_t> nz;
    for (size_t k = 0; k < width_; ++k) {
      if (sgn(rows_[r][k]) != 0) {
        rows_[r][k] /= p;
        nz.push_back(k);
      }
    }
    rhs_[r] /= p;
    auto eliminate = [&](std::vector<Rational>& row, Rational& value) {
      Rational f = row[c];
      if (sgn(f) == 0) return;
      for (size_t k : nz) row[k] -= f * rows_[r][k];
      value -= f * rhs_[r];
    };
    for (size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i], rhs_[i]);
    }
    // The objective row tracks reduced costs and the objective value, so it
    // is updated with the opposite sign convention for the value.
    Rational f = reduced_[c];
    if (sgn(f) != 0) {
      for (size_t k : nz) reduced_[k] -= f * rows_[r][k];
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  size_t m_, cols_, width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_ = 0;
};

}  // namespace

PhaseOneResult phase_one(const std::vector<std::vector<Rational>>& a,
                         const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InvalidInput("row count mismatch");
  Tableau t(a, b);
  t.solve();
  return t.result();
}

}  // namespace sgames::internal
