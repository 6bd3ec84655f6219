// Copyright 2026 The bipotkit Authors
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

#include "max_affine_lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bipotkit/error.h"

namespace bipotkit::internal {
namespace {

constexpr double kPivotEps = 1e-12;

// 1-D: lower convex hull of the points (a_i, -b_i), interpolated at y.
ExtendedValue Conjugate1D(std::span<const form::Affine> pieces, double y) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(pieces.size());
  for (const auto& p : pieces) pts.emplace_back(p.slope[0], -p.offset);
  std::sort(pts.begin(), pts.end());
  if (y < pts.front().first || y > pts.back().first) {
    return ExtendedValue::Infinity();
  }
  // Among equal slopes only the lowest point matters.
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && hull.back().first == p.first) continue;
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const double cross = (a.first - o.first) * (p.second - o.second) -
                           (a.second - o.second) * (p.first - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (size_t i = 0; i < hull.size(); ++i) {
    if (hull[i].first == y) return hull[i].second;
    if (i + 1 < hull.size() && hull[i + 1].first > y) {
      const double t = (y - hull[i].first) / (hull[i + 1].first - hull[i].first);
      return hull[i].second + t * (hull[i + 1].second - hull[i].second);
    }
  }
  return hull.back().second;
}

// Dense tableau simplex with Bland's rule. Rows are equality constraints
// with nonnegative right-hand side; one artificial variable per row.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(int r, int c) { return t_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }
  std::vector<int>& basis() { return basis_; }

  // Minimizes the cost row; returns false if unbounded (cannot happen for
  // the bounded feasible sets used here, kept as a guard).
  bool Solve(int allowed_cols) {
    for (int iter = 0; iter < 10000; ++iter) {
      int enter = -1;
      for (int c = 0; c < allowed_cols; ++c) {
        if (cost(c) < -kPivotEps) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a > kPivotEps) {
          const double ratio = rhs(r) / a;
          if (leave < 0 || ratio < best - kPivotEps ||
              (ratio <= best + kPivotEps && basis_[r] < basis_[leave])) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
    throw InvariantViolation("MaxAffineConjugate: simplex iteration limit");
  }

  void Pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> t_;
  std::vector<int> basis_;
};

}  // namespace

ExtendedValue MaxAffineConjugate(std::span<const form::Affine> pieces,
                                 const Vector& y) {
  if (pieces.empty()) throw PreconditionError("MaxAffine: no pieces");
  const int n = y.dim();
  if (n == 1) return Conjugate1D(pieces, y[0]);

  const int k = int(pieces.size());
  const int rows = n + 1;
  const int cols = k + rows;  // mu, then artificials
  Tableau tab(rows, cols);
  double scale = 1.0;
  for (const auto& p : pieces) {
    for (int d = 0; d < n; ++d) scale = std::max(scale, std::abs(p.slope[d]));
  }
  for (int r = 0; r < rows; ++r) {
    double b = (r < n) ? y[r] : 1.0;
    const double sign = b < 0 ? -1.0 : 1.0;
    for (int i = 0; i < k; ++i) {
      tab.at(r, i) = sign * ((r < n) ? pieces[i].slope[r] : 1.0);
    }
    tab.at(r, k + r) = 1.0;
    tab.rhs(r) = sign * b;
    tab.basis()[r] = k + r;
  }
  // Phase I: minimize the sum of artificials.
  for (int c = 0; c <= cols; ++c) {
    double s = 0.0;
    if (c < k || c == cols) {
      for (int r = 0; r < rows; ++r) s += tab.at(r, c);
      tab.cost(c) = -s;
    } else {
      tab.cost(c) = 0.0;
    }
  }
  tab.Solve(cols);
  if (-tab.cost(cols) > 1e-9 * scale) return ExtendedValue::Infinity();
  // Drive any zero-level artificial out of the basis where possible.
  for (int r = 0; r < rows; ++r) {
    if (tab.basis()[r] < k) continue;
    for (int c = 0; c < k; ++c) {
      if (std::abs(tab.at(r, c)) > kPivotEps) {
        tab.Pivot(r, c);
        break;
      }
    }
  }
  // Phase II: minimize sum mu_i (-b_i) over the structural columns only.
  for (int c = 0; c <= cols; ++c) tab.cost(c) = 0.0;
  for (int i = 0; i < k; ++i) tab.cost(i) = -pieces[i].offset;
  for (int r = 0; r < rows; ++r) {
    const int b = tab.basis()[r];
    const double cb = (b < k) ? -pieces[b].offset : 0.0;
    if (cb == 0.0) continue;
    for (int c = 0; c <= cols; ++c) tab.cost(c) -= cb * tab.at(r, c);
  }
  if (!tab.Solve(k)) {
    throw InvariantViolation("MaxAffineConjugate: unbounded LP");
  }
  // Recompute the objective from the primal solution for accuracy.
  double value = 0.0;
  for (int r = 0; r < rows; ++r) {
    const int b = tab.basis()[r];
    if (b < k) value += tab.rhs(r) * -pieces[b].offset;
  }
  return value;
}

}  // namespace bipotkit::internal
