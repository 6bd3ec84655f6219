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

#include "bipotkit/discrete_conjugate.h"

#include <cmath>
#include <limits>

#include "bipotkit/error.h"

namespace bipotkit {
namespace {

void CheckSizes(std::span<const Vector> grid, std::span<const ExtendedValue> values) {
  if (grid.size() != values.size()) {
    throw PreconditionError("discrete conjugate: grid and values differ in size");
  }
  if (grid.empty()) throw PreconditionError("discrete conjugate: empty grid");
}

[[noreturn]] void ThrowMinusInfinity() {
  throw InvariantViolation(
      "discrete conjugate is -inf: every sample is +inf (empty effective domain)");
}

}  // namespace

bool IsIncreasing1D(std::span<const Vector> grid) {
  if (grid.empty() || grid.front().dim() != 1) return false;
  for (size_t i = 1; i < grid.size(); ++i) {
    if (grid[i].dim() != 1 || !(grid[i - 1][0] < grid[i][0])) return false;
  }
  return true;
}

std::vector<ExtendedValue> DiscreteConjugateBruteForce(
    std::span<const Vector> grid, std::span<const ExtendedValue> values,
    std::span<const Vector> dual_grid) {
  CheckSizes(grid, values);
  std::vector<ExtendedValue> out;
  out.reserve(dual_grid.size());
  for (const auto& y : dual_grid) {
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < grid.size(); ++i) {
      if (values[i].is_infinite()) continue;
      best = std::max(best, Inner(grid[i], y) - values[i].value());
    }
    if (best == -std::numeric_limits<double>::infinity()) ThrowMinusInfinity();
    out.push_back(best);
  }
  return out;
}

std::vector<ExtendedValue> DiscreteConjugateLinear1D(
    std::span<const Vector> grid, std::span<const ExtendedValue> values,
    std::span<const Vector> dual_grid) {
  CheckSizes(grid, values);
  if (!IsIncreasing1D(grid) || !IsIncreasing1D(dual_grid)) {
    throw PreconditionError(
        "DiscreteConjugateLinear1D: grids must be 1-D and strictly increasing");
  }
  // Lower convex hull of the finite samples; collinear points are kept so
  // that ties resolve to the same node as the brute force.
  std::vector<size_t> hull;
  hull.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    if (values[i].is_infinite()) continue;
    while (hull.size() >= 2) {
      const size_t o = hull[hull.size() - 2];
      const size_t a = hull.back();
      const double x0 = grid[o][0], x1 = grid[a][0], x2 = grid[i][0];
      const double v0 = values[o].value(), v1 = values[a].value(),
                   v2 = values[i].value();
      // Drop `a` when it lies strictly above the chord from o to i.
      if ((x1 - x0) * (v2 - v0) - (v1 - v0) * (x2 - x0) < 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  if (hull.empty()) ThrowMinusInfinity();

  auto value_at = [&](size_t h, const Vector& y) {
    return Inner(grid[hull[h]], y) - values[hull[h]].value();
  };
  std::vector<ExtendedValue> out;
  out.reserve(dual_grid.size());
  size_t p = 0;
  for (const auto& y : dual_grid) {
    // The maximizing hull vertex moves right as the slope y increases.
    while (p + 1 < hull.size() && value_at(p + 1, y) >= value_at(p, y)) ++p;
    double best = value_at(p, y);
    // Rounding may leave a plateau of near-equal values; settle on the
    // largest computed one.
    const double slack = 1e-12 * (1.0 + std::abs(best));
    for (size_t q = p + 1; q < hull.size(); ++q) {
      const double v = value_at(q, y);
      if (v < best - slack) break;
      if (v > best) {
        best = v;
        p = q;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace bipotkit
