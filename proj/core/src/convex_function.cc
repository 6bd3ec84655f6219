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

#include "bipotkit/convex_function.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bipotkit/discrete_conjugate.h"
#include "bipotkit/error.h"
#include "max_affine_lp.h"

namespace bipotkit {
namespace {

// Relative slack on ball membership so that points constructed on the
// sphere |y| = r are not rejected because of rounding in the norm.
constexpr double kBallSlack = 8 * std::numeric_limits<double>::epsilon();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireScale(double s, const char* what) {
  if (!std::isfinite(s) || s < 0.0) {
    throw PreconditionError(std::string(what) + ": scale must be finite and >= 0");
  }
}

void RequireDim(const Vector& v, int dim) {
  if (v.dim() != dim) {
    throw DimensionMismatch("ConvexFunction: expected dimension " +
                            std::to_string(dim) + ", got " +
                            std::to_string(v.dim()));
  }
}

ExtendedValue EvaluateSampled(const form::Sampled& s, const Vector& x) {
  if (x.dim() == 1) {
    auto it = std::lower_bound(s.grid.begin(), s.grid.end(), x);
    if (it != s.grid.end() && *it == x) return s.values[it - s.grid.begin()];
    return ExtendedValue::Infinity();
  }
  for (size_t i = 0; i < s.grid.size(); ++i) {
    if (s.grid[i] == x) return s.values[i];
  }
  return ExtendedValue::Infinity();
}

}  // namespace

bool InClosedBall(const Vector& x, ExtendedValue radius) {
  if (radius.is_infinite()) return true;
  const double r = radius.value();
  return Norm(x) <= r + r * kBallSlack;
}

ConvexFunction::ConvexFunction(int dim, Form f) : dim_(dim), form_(std::move(f)) {
  if (dim < 1 || dim > Vector::kMaxDimension) {
    throw PreconditionError("ConvexFunction: dimension must be in [1, 3]");
  }
  std::visit(
      Overloaded{
          [](const form::Quadratic& q) { RequireScale(q.scale, "Quadratic"); },
          [](const form::ScaledNorm& q) { RequireScale(q.scale, "ScaledNorm"); },
          [](const form::IndicatorBall& b) {
            if (b.radius < 0.0) {
              throw PreconditionError("IndicatorBall: negative radius");
            }
          },
          [dim](const form::IndicatorPoint& p) {
            RequireDim(p.point, dim);
            if (!std::isfinite(p.level)) {
              throw PreconditionError("IndicatorPoint: non-finite level");
            }
          },
          [dim](const form::Affine& a) {
            RequireDim(a.slope, dim);
            if (!std::isfinite(a.offset)) {
              throw PreconditionError("Affine: non-finite offset");
            }
          },
          [dim](const form::MaxAffine& m) {
            if (m.pieces.empty()) {
              throw PreconditionError("MaxAffine: needs at least one piece");
            }
            for (const auto& p : m.pieces) {
              RequireDim(p.slope, dim);
              if (!std::isfinite(p.offset)) {
                throw PreconditionError("MaxAffine: non-finite offset");
              }
            }
          },
          [dim](const form::Sampled& s) {
            if (s.grid.empty()) throw PreconditionError("Sampled: empty grid");
            if (s.grid.size() != s.values.size()) {
              throw PreconditionError("Sampled: grid and values differ in size");
            }
            for (const auto& v : s.grid) RequireDim(v, dim);
            if (dim == 1 && !IsIncreasing1D(s.grid)) {
              throw PreconditionError("Sampled: 1-D grid must be strictly increasing");
            }
          },
      },
      form_);
}

ConvexFunction ConvexFunction::Quadratic(int dim, double scale) {
  return ConvexFunction(dim, form::Quadratic{scale});
}
ConvexFunction ConvexFunction::ScaledNorm(int dim, double scale) {
  return ConvexFunction(dim, form::ScaledNorm{scale});
}
ConvexFunction ConvexFunction::IndicatorBall(int dim, ExtendedValue radius) {
  return ConvexFunction(dim, form::IndicatorBall{radius});
}
ConvexFunction ConvexFunction::IndicatorPoint(Vector point, double level) {
  const int dim = point.dim();
  return ConvexFunction(dim, form::IndicatorPoint{std::move(point), level});
}
ConvexFunction ConvexFunction::Affine(Vector slope, double offset) {
  const int dim = slope.dim();
  return ConvexFunction(dim, form::Affine{std::move(slope), offset});
}
ConvexFunction ConvexFunction::MaxAffine(std::vector<form::Affine> pieces) {
  if (pieces.empty()) throw PreconditionError("MaxAffine: needs at least one piece");
  const int dim = pieces.front().slope.dim();
  return ConvexFunction(dim, form::MaxAffine{std::move(pieces)});
}
ConvexFunction ConvexFunction::Sampled(std::vector<Vector> grid,
                                       std::vector<ExtendedValue> values) {
  if (grid.empty()) throw PreconditionError("Sampled: empty grid");
  const int dim = grid.front().dim();
  return ConvexFunction(dim, form::Sampled{std::move(grid), std::move(values)});
}

bool ConvexFunction::is_analytic() const {
  return !std::holds_alternative<form::MaxAffine>(form_) &&
         !std::holds_alternative<form::Sampled>(form_);
}

ExtendedValue Evaluate(const ConvexFunction& phi, const Vector& x) {
  RequireDim(x, phi.dim());
  return std::visit(
      Overloaded{
          [&](const form::Quadratic& q) -> ExtendedValue {
            return (0.5 * q.scale) * SquaredNorm(x);
          },
          [&](const form::ScaledNorm& q) -> ExtendedValue {
            return q.scale * Norm(x);
          },
          [&](const form::IndicatorBall& b) -> ExtendedValue {
            return InClosedBall(x, b.radius) ? ExtendedValue(0.0) : ExtendedValue::Infinity();
          },
          [&](const form::IndicatorPoint& p) -> ExtendedValue {
            return x == p.point ? ExtendedValue(p.level) : ExtendedValue::Infinity();
          },
          [&](const form::Affine& a) -> ExtendedValue {
            return Inner(a.slope, x) + a.offset;
          },
          [&](const form::MaxAffine& m) -> ExtendedValue {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& p : m.pieces) {
              best = std::max(best, Inner(p.slope, x) + p.offset);
            }
            return best;
          },
          [&](const form::Sampled& s) { return EvaluateSampled(s, x); },
      },
      phi.form());
}

ConvexFunction Conjugate(const ConvexFunction& phi,
                         std::span<const Vector> dual_grid) {
  const int dim = phi.dim();
  return std::visit(
      Overloaded{
          [&](const form::Quadratic& q) {
            if (q.scale == 0.0) return ConvexFunction::IndicatorPoint(Vector::Zero(dim));
            return ConvexFunction::Quadratic(dim, 1.0 / q.scale);
          },
          [&](const form::ScaledNorm& q) {
            return ConvexFunction::IndicatorBall(dim, q.scale);
          },
          [&](const form::IndicatorBall& b) {
            if (b.radius.is_infinite()) {
              return ConvexFunction::IndicatorPoint(Vector::Zero(dim));
            }
            return ConvexFunction::ScaledNorm(dim, b.radius.value());
          },
          [&](const form::IndicatorPoint& p) {
            if (p.point.IsZero() && p.level == 0.0) {
              return ConvexFunction::Quadratic(dim, 0.0);
            }
            return ConvexFunction::Affine(p.point, -p.level);
          },
          [&](const form::Affine& a) {
            return ConvexFunction::IndicatorPoint(a.slope, -a.offset);
          },
          [&](const form::MaxAffine& m) {
            if (dual_grid.empty()) {
              throw PreconditionError("Conjugate(MaxAffine): dual grid required");
            }
            std::vector<ExtendedValue> values;
            values.reserve(dual_grid.size());
            for (const auto& y : dual_grid) {
              RequireDim(y, dim);
              values.push_back(internal::MaxAffineConjugate(m.pieces, y));
            }
            return ConvexFunction::Sampled({dual_grid.begin(), dual_grid.end()},
                                           std::move(values));
          },
          [&](const form::Sampled& s) {
            if (dual_grid.empty()) {
              throw PreconditionError("Conjugate(Sampled): dual grid required");
            }
            for (const auto& y : dual_grid) RequireDim(y, dim);
            std::vector<ExtendedValue> values =
                (IsIncreasing1D(s.grid) && IsIncreasing1D(dual_grid))
                    ? DiscreteConjugateLinear1D(s.grid, s.values, dual_grid)
                    : DiscreteConjugateBruteForce(s.grid, s.values, dual_grid);
            return ConvexFunction::Sampled({dual_grid.begin(), dual_grid.end()},
                                           std::move(values));
          },
      },
      phi.form());
}

ExtendedValue ConjugateAt(const ConvexFunction& phi, const Vector& y) {
  RequireDim(y, phi.dim());
  if (const auto* m = phi.As<form::MaxAffine>()) {
    return internal::MaxAffineConjugate(m->pieces, y);
  }
  if (const auto* s = phi.As<form::Sampled>()) {
    return DiscreteConjugateBruteForce(s->grid, s->values, {&y, 1}).front();
  }
  return Evaluate(Conjugate(phi), y);
}

ConvexFunction Scaled(const ConvexFunction& phi, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw PreconditionError("Scaled: factor must be finite and > 0");
  }
  const int dim = phi.dim();
  return std::visit(
      Overloaded{
          [&](const form::Quadratic& q) {
            return ConvexFunction::Quadratic(dim, alpha * q.scale);
          },
          [&](const form::ScaledNorm& q) {
            return ConvexFunction::ScaledNorm(dim, alpha * q.scale);
          },
          [&](const form::IndicatorBall&) { return phi; },
          [&](const form::IndicatorPoint& p) {
            return ConvexFunction::IndicatorPoint(p.point, alpha * p.level);
          },
          [&](const form::Affine& a) {
            return ConvexFunction::Affine(alpha * a.slope, alpha * a.offset);
          },
          [&](const form::MaxAffine& m) {
            std::vector<form::Affine> pieces = m.pieces;
            for (auto& p : pieces) {
              p.slope *= alpha;
              p.offset *= alpha;
            }
            return ConvexFunction::MaxAffine(std::move(pieces));
          },
          [&](const form::Sampled& s) {
            std::vector<ExtendedValue> values;
            values.reserve(s.values.size());
            for (auto v : s.values) values.push_back(Scale(alpha, v));
            return ConvexFunction::Sampled(s.grid, std::move(values));
          },
      },
      phi.form());
}

FenchelGapReport FenchelGap(const ConvexFunction& phi, const Vector& x,
                            const Vector& y, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("FenchelGap: tol must be > 0");
  CheckSameDimension(x, y);
  const ExtendedValue sum = Evaluate(phi, x) + ConjugateAt(phi, y);
  if (sum.is_infinite()) return {ExtendedValue::Infinity(), false};
  const double gap = sum.value() - Inner(x, y);
  if (gap < -tol) {
    throw InvariantViolation("Fenchel inequality violated at x=" + x.ToString() +
                             ", y=" + y.ToString() +
                             " (gap " + std::to_string(gap) + ")");
  }
  return {gap, gap <= tol};
}

bool SubdifferentialContains(const ConvexFunction& phi, const Vector& x,
                             const Vector& y, double tol) {
  return FenchelGap(phi, x, y, tol).at_equality;
}

std::vector<std::pair<Vector, Vector>> GraphOf(const ConvexFunction& phi,
                                               std::span<const Vector> x_grid,
                                               std::span<const Vector> y_grid,
                                               double tol) {
  if (x_grid.empty() || y_grid.empty()) {
    throw PreconditionError("GraphOf: grids must be nonempty");
  }
  if (!(tol > 0.0)) throw PreconditionError("GraphOf: tol must be > 0");
  std::vector<ExtendedValue> primal;
  primal.reserve(x_grid.size());
  for (const auto& x : x_grid) primal.push_back(Evaluate(phi, x));
  std::vector<ExtendedValue> dual;
  dual.reserve(y_grid.size());
  for (const auto& y : y_grid) dual.push_back(ConjugateAt(phi, y));

  std::vector<std::pair<Vector, Vector>> out;
  for (size_t i = 0; i < x_grid.size(); ++i) {
    if (primal[i].is_infinite()) continue;
    for (size_t j = 0; j < y_grid.size(); ++j) {
      if (dual[j].is_infinite()) continue;
      const double gap = primal[i].value() + dual[j].value() - Inner(x_grid[i], y_grid[j]);
      if (gap < -tol) {
        throw InvariantViolation("GraphOf: negative Fenchel gap");
      }
      if (gap <= tol) out.emplace_back(x_grid[i], y_grid[j]);
    }
  }
  return out;
}

}  // namespace bipotkit
