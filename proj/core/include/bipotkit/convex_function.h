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

#ifndef BIPOTKIT_CONVEX_FUNCTION_H_
#define BIPOTKIT_CONVEX_FUNCTION_H_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bipotkit/extended_value.h"
#include "bipotkit/vector.h"

namespace bipotkit {

// Default tolerances: analytic forms are exact up to rounding, sampled
// forms go through a discrete sup over up to ~1e4 nodes.
inline constexpr double kAnalyticTolerance = 1e-9;
inline constexpr double kSampledTolerance = 1e-6;

namespace form {

// x -> (scale / 2) |x|^2
struct Quadratic {
  double scale = 0.0;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

// x -> scale |x|
struct ScaledNorm {
  double scale = 0.0;
  friend bool operator==(const ScaledNorm&, const ScaledNorm&) = default;
};

// Indicator of the closed centered ball of the given radius; radius +inf is
// the whole space.
struct IndicatorBall {
  ExtendedValue radius;
  friend bool operator==(const IndicatorBall&, const IndicatorBall&) = default;
};

// `level` at `point`, +inf elsewhere. The level lets the conjugate of an
// affine function be represented exactly.
struct IndicatorPoint {
  Vector point;
  double level = 0.0;
  friend bool operator==(const IndicatorPoint&, const IndicatorPoint&) = default;
};

// x -> <slope, x> + offset
struct Affine {
  Vector slope;
  double offset = 0.0;
  friend bool operator==(const Affine&, const Affine&) = default;
};

struct MaxAffine {
  std::vector<Affine> pieces;
  friend bool operator==(const MaxAffine&, const MaxAffine&) = default;
};

// Values on a finite grid, +inf off the grid. In 1-D the grid is strictly
// increasing. Values need not be convex along the grid.
struct Sampled {
  std::vector<Vector> grid;
  std::vector<ExtendedValue> values;
  friend bool operator==(const Sampled&, const Sampled&) = default;
};

}  // namespace form

// A convex lower semicontinuous potential R^n -> R u {+inf}, either in one
// of the closed forms above or sampled on a grid.
class ConvexFunction {
 public:
  using Form = std::variant<form::Quadratic, form::ScaledNorm,
                            form::IndicatorBall, form::IndicatorPoint,
                            form::Affine, form::MaxAffine, form::Sampled>;

  // Validates the form against `dim`. Throws PreconditionError or
  // DimensionMismatch.
  ConvexFunction(int dim, Form f);

  static ConvexFunction Quadratic(int dim, double scale);
  static ConvexFunction ScaledNorm(int dim, double scale);
  static ConvexFunction IndicatorBall(int dim, ExtendedValue radius);
  static ConvexFunction IndicatorPoint(Vector point, double level = 0.0);
  static ConvexFunction Affine(Vector slope, double offset);
  static ConvexFunction MaxAffine(std::vector<form::Affine> pieces);
  static ConvexFunction Sampled(std::vector<Vector> grid,
                                std::vector<ExtendedValue> values);

  int dim() const { return dim_; }
  const Form& form() const { return form_; }
  bool is_analytic() const;

  template <typename F>
  const F* As() const {
    return std::get_if<F>(&form_);
  }

  friend bool operator==(const ConvexFunction&, const ConvexFunction&) = default;

 private:
  int dim_;
  Form form_;
};

// |x| <= radius, with a relative slack of a few ulps so that points built
// as radius * unit vector test inside.
bool InClosedBall(const Vector& x, ExtendedValue radius);

// phi(x). Sampled functions are +inf off their grid.
ExtendedValue Evaluate(const ConvexFunction& phi, const Vector& x);

// The exact polar phi*(y) = sup_x <x, y> - phi(x) at one point. Closed form
// for analytic forms, a linear program for MaxAffine, and the finite max over
// the grid for Sampled. Throws InvariantViolation if the sup is -inf (all
// samples +inf).
ExtendedValue ConjugateAt(const ConvexFunction& phi, const Vector& y);

// The polar as a ConvexFunction. Analytic forms map to closed forms;
// MaxAffine and Sampled map to a Sampled function on `dual_grid` (required
// for them, ignored otherwise). For Sampled inputs in 1-D with both grids
// increasing the linear-time merge is used.
ConvexFunction Conjugate(const ConvexFunction& phi,
                         std::span<const Vector> dual_grid = {});

// alpha * phi for alpha > 0.
ConvexFunction Scaled(const ConvexFunction& phi, double alpha);

struct FenchelGapReport {
  ExtendedValue gap;
  bool at_equality = false;
};

// phi(x) + phi*(y) - <x, y>. Throws InvariantViolation if the gap is below
// -tol, which would mean the conjugate is wrong.
FenchelGapReport FenchelGap(const ConvexFunction& phi, const Vector& x,
                            const Vector& y, double tol);

// y in d phi(x), decided by the equality case of the Fenchel inequality.
bool SubdifferentialContains(const ConvexFunction& phi, const Vector& x,
                             const Vector& y, double tol);

// Sampled graph M(phi): all (x, y) of x_grid * y_grid with gap <= tol, in
// lexicographic grid order.
std::vector<std::pair<Vector, Vector>> GraphOf(const ConvexFunction& phi,
                                               std::span<const Vector> x_grid,
                                               std::span<const Vector> y_grid,
                                               double tol);

}  // namespace bipotkit

#endif  // BIPOTKIT_CONVEX_FUNCTION_H_
