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

#ifndef BIPOTKIT_COVER_H_
#define BIPOTKIT_COVER_H_

#include <optional>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "bipotkit/convex_function.h"
#include "bipotkit/extended_value.h"
#include "bipotkit/law_graph.h"
#include "bipotkit/vector.h"

namespace bipotkit {

// A cover parameter: a nonnegative real or +inf.
using Parameter = ExtendedValue;

// Log-spaced part of an interval's sample grid.
struct LogGridSpec {
  int points = 512;
  double min = 1e-3;
  double max = 1e3;
};

// The compact parameter space of a cover.
class ParameterDomain {
 public:
  // [lo, hi], plus the point +inf when includes_infinity. hi = +inf
  // requires includes_infinity.
  struct Interval {
    double lo = 0.0;
    ExtendedValue hi = ExtendedValue::Infinity();
    bool includes_infinity = true;
  };
  struct FiniteSet {
    std::vector<Parameter> values;
  };
  using Kind = std::variant<Interval, FiniteSet>;

  // The sample grid is {lo} u log-spaced points over
  // [max(lo, spec.min), min(hi, spec.max)] u {hi} u {+inf if included},
  // sorted and without duplicates. The k-th log point is
  // exp(a + (b - a) * (k / (points - 1))) in log coordinates, so a grid of
  // 2N - 1 points contains every point of the N-point grid.
  static ParameterDomain MakeInterval(double lo, ExtendedValue hi,
                                      bool includes_infinity,
                                      LogGridSpec spec = {});
  static ParameterDomain MakeFiniteSet(std::vector<Parameter> values);

  const Kind& kind() const { return kind_; }
  // Ascending.
  const std::vector<Parameter>& sample_grid() const { return grid_; }
  bool Contains(Parameter lambda) const;

 private:
  ParameterDomain(Kind kind, std::vector<Parameter> grid)
      : kind_(std::move(kind)), grid_(std::move(grid)) {}

  Kind kind_;
  std::vector<Parameter> grid_;
};

namespace family {

// phi_l = (l/2)|x|^2, phi*_l = |y|^2 / (2 l); f(0, x, y) = chi_0(y) and
// f(inf, x, y) = chi_0(x).
struct Quadratic {};

// phi_l = l|x|, phi*_l = chi of the ball of radius l; f(inf, x, y) =
// chi_0(x).
struct Norm {};

// One potential; the parameter space is the single point 1.
struct Separable {
  ConvexFunction phi;
};

struct Tabulated {
  struct Member {
    Parameter lambda;
    ConvexFunction potential;
    ConvexFunction conjugate;
  };
  // Sorted by lambda.
  std::vector<Member> members;
};

}  // namespace family

class Cover {
 public:
  using Family = std::variant<family::Quadratic, family::Norm,
                              family::Separable, family::Tabulated>;

  // The built-in families default to [0, inf] with the default log grid.
  static Cover Quadratic(int dim, ParameterDomain domain = DefaultDomain());
  static Cover Norm(int dim, ParameterDomain domain = DefaultDomain());
  static Cover Separable(ConvexFunction phi);
  // Members must have distinct lambdas and share one dimension. The
  // domain is the finite set of member lambdas.
  static Cover Tabulated(std::vector<family::Tabulated::Member> members);

  static ParameterDomain DefaultDomain();

  int dim() const { return dim_; }
  const ParameterDomain& domain() const { return domain_; }
  const Family& family() const { return family_; }

  template <typename F>
  bool Is() const {
    return std::holds_alternative<F>(family_);
  }

  // Lower semicontinuity of (lambda, x) -> f holds structurally for the
  // built-in families and is only assumed for tabulated ones.
  bool lsc_assumed() const { return Is<family::Tabulated>(); }

  // phi_lambda and its conjugate as ConvexFunction values. Throws
  // PreconditionError if lambda is outside the domain.
  ConvexFunction Potential(Parameter lambda) const;
  ConvexFunction DualPotential(Parameter lambda) const;

 private:
  Cover(int dim, ParameterDomain domain, Family family)
      : dim_(dim), domain_(std::move(domain)), family_(std::move(family)) {}

  int dim_;
  ParameterDomain domain_;
  Family family_;
};

// f(lambda, x, y) = phi_lambda(x) + phi*_lambda(y), with the exact case
// split at lambda in {0, inf}. Throws PreconditionError if lambda is outside
// the domain and DimensionMismatch on mixed dimensions.
ExtendedValue FEval(const Cover& c, Parameter lambda, const Vector& x,
                    const Vector& y);

struct GridInfimum {
  ExtendedValue value;
  // First grid parameter attaining the minimum.
  Parameter argmin;
};

// min over the domain's sample grid of f(lambda, x, y).
GridInfimum GridInf(const Cover& c, const Vector& x, const Vector& y);

struct CoverageReport {
  bool covered = true;
  std::vector<std::pair<Vector, Vector>> missed_pairs;
  std::vector<std::tuple<Parameter, Vector, Vector>> spurious_pairs;
  bool lsc_assumed = false;
};

// Missed: pairs of m whose grid infimum of f - <x, y> exceeds tol.
// Spurious: (lambda, x, y) over sample grid x Domain(m) x Image(m) with
// f - <x, y> <= tol but (x, y) not in m within tol.
CoverageReport CoverageCheck(const Cover& c, const LawGraph& m, double tol);

// A parameter lambda with
//   f(lambda, a x1 + b x2, y) <= a f(l1, x1, y) + b f(l2, x2, y),  b = 1 - a,
// given x_i in d phi*_{l_i}(y). Quadratic: 1/lambda = a/l1 + b/l2 with
// 1/0 = inf and 1/inf = 0. Norm: min(l1, l2). Separable: its only
// parameter. Tabulated: the first sample parameter, ascending, with
// a x1 + b x2 in d phi*_lambda(y) within tol; nullopt if there is none.
// Throws PreconditionError if alpha is outside [0, 1], a parameter is
// outside the domain or a subdifferential precondition fails.
std::optional<Parameter> P1Candidate(const Cover& c, Parameter l1, Parameter l2,
                                     double alpha, const Vector& x1,
                                     const Vector& x2, const Vector& y,
                                     double tol);

// The mirrored selector for the second argument:
//   f(lambda, x, a y1 + b y2) <= a f(l1, x, y1) + b f(l2, x, y2),
// given y_i in d phi_{l_i}(x). Both built-in families use
// lambda = a l1 + b l2 (0 * inf = 0).
std::optional<Parameter> P1CandidateDual(const Cover& c, Parameter l1,
                                         Parameter l2, double alpha,
                                         const Vector& y1, const Vector& y2,
                                         const Vector& x, double tol);

namespace internal {
// The selection rules without precondition checks. The result may fail
// the implicit-convexity inequality when the preconditions do not hold.
std::optional<Parameter> CandidateRule(const Cover& c, Side side, Parameter l1,
                                       Parameter l2, double alpha,
                                       const Vector& z1, const Vector& z2,
                                       const Vector& fixed, double tol);
}  // namespace internal

}  // namespace bipotkit

#endif  // BIPOTKIT_COVER_H_
