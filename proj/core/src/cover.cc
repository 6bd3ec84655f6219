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

#include "bipotkit/cover.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bipotkit/error.h"

namespace bipotkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ExtendedValue ZeroIndicator(const Vector& v) {
  return v.IsZero() ? ExtendedValue(0.0) : ExtendedValue::Infinity();
}

Vector Combine(double alpha, const Vector& z1, const Vector& z2) {
  return alpha * z1 + (1.0 - alpha) * z2;
}

ExtendedValue Reciprocal(Parameter lambda) {
  if (lambda.is_infinite()) return 0.0;
  if (lambda.value() == 0.0) return ExtendedValue::Infinity();
  return 1.0 / lambda.value();
}

const family::Tabulated::Member& MemberAt(const family::Tabulated& t,
                                          Parameter lambda) {
  auto it = std::lower_bound(
      t.members.begin(), t.members.end(), lambda,
      [](const family::Tabulated::Member& m, Parameter l) { return m.lambda < l; });
  if (it == t.members.end() || it->lambda != lambda) {
    throw PreconditionError("Cover: no tabulated member at lambda = " +
                            lambda.ToString());
  }
  return *it;
}

void RequireInDomain(const Cover& c, Parameter lambda) {
  if (!c.domain().Contains(lambda)) {
    throw PreconditionError("Cover: lambda = " + lambda.ToString() +
                            " is outside the parameter domain");
  }
}

void RequireDim(const Cover& c, const Vector& v) {
  if (v.dim() != c.dim()) {
    throw DimensionMismatch("Cover: expected dimension " + std::to_string(c.dim()) +
                            ", got " + std::to_string(v.dim()));
  }
}

// f without the domain check.
ExtendedValue FEvalUnchecked(const Cover& c, Parameter lambda, const Vector& x,
                             const Vector& y) {
  return std::visit(
      Overloaded{
          [&](const family::Quadratic&) -> ExtendedValue {
            if (lambda.is_infinite()) return ZeroIndicator(x);
            const double l = lambda.value();
            if (l == 0.0) return ZeroIndicator(y);
            const double a = 0.5 * l;
            const double b = 0.5 / l;
            return a * SquaredNorm(x) + b * SquaredNorm(y);
          },
          [&](const family::Norm&) -> ExtendedValue {
            if (lambda.is_infinite()) return ZeroIndicator(x);
            const double l = lambda.value();
            if (!InClosedBall(y, l)) return ExtendedValue::Infinity();
            return l * Norm(x);
          },
          [&](const family::Separable& s) -> ExtendedValue {
            return Evaluate(s.phi, x) + ConjugateAt(s.phi, y);
          },
          [&](const family::Tabulated& t) -> ExtendedValue {
            const auto& m = MemberAt(t, lambda);
            return Evaluate(m.potential, x) + Evaluate(m.conjugate, y);
          },
      },
      c.family());
}

// f(lambda, x, y) - <x, y> <= tol.
bool InGraph(const Cover& c, Parameter lambda, const Vector& x, const Vector& y,
             double tol) {
  const ExtendedValue f = FEvalUnchecked(c, lambda, x, y);
  return f.is_finite() && f.value() - Inner(x, y) <= tol;
}

}  // namespace

ParameterDomain ParameterDomain::MakeInterval(double lo, ExtendedValue hi,
                                              bool includes_infinity,
                                              LogGridSpec spec) {
  if (!std::isfinite(lo) || lo < 0.0) {
    throw PreconditionError("ParameterDomain: lo must be finite and >= 0");
  }
  if (hi < lo) throw PreconditionError("ParameterDomain: hi < lo");
  if (hi.is_infinite() && !includes_infinity) {
    throw PreconditionError("ParameterDomain: hi = inf requires includes_infinity");
  }
  if (spec.points < 2 || !(spec.min > 0.0) || !(spec.min < spec.max) ||
      !std::isfinite(spec.max)) {
    throw PreconditionError("ParameterDomain: bad log grid spec");
  }

  std::vector<double> pts{lo};
  const double a = std::max(lo, spec.min);
  const double b = hi.is_finite() ? std::min(hi.value(), spec.max) : spec.max;
  if (a < b) {
    const double la = std::log(a);
    const double lb = std::log(b);
    for (int k = 0; k < spec.points; ++k) {
      if (k == 0) {
        pts.push_back(a);
      } else if (k == spec.points - 1) {
        pts.push_back(b);
      } else {
        const double t = double(k) / double(spec.points - 1);
        pts.push_back(std::exp(la + (lb - la) * t));
      }
    }
  }
  if (hi.is_finite()) pts.push_back(hi.value());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Parameter> grid(pts.begin(), pts.end());
  if (includes_infinity) grid.push_back(ExtendedValue::Infinity());
  return ParameterDomain(Interval{lo, hi, includes_infinity}, std::move(grid));
}

ParameterDomain ParameterDomain::MakeFiniteSet(std::vector<Parameter> values) {
  if (values.empty()) throw PreconditionError("ParameterDomain: empty set");
  for (Parameter v : values) {
    if (v < 0.0) throw PreconditionError("ParameterDomain: negative parameter");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Parameter> grid = values;
  return ParameterDomain(FiniteSet{std::move(values)}, std::move(grid));
}

bool ParameterDomain::Contains(Parameter lambda) const {
  return std::visit(
      Overloaded{
          [&](const Interval& i) {
            if (lambda.is_infinite()) return i.includes_infinity;
            return i.lo <= lambda.value() && lambda <= i.hi;
          },
          [&](const FiniteSet& s) {
            return std::binary_search(s.values.begin(), s.values.end(), lambda);
          },
      },
      kind_);
}

ParameterDomain Cover::DefaultDomain() {
  return ParameterDomain::MakeInterval(0.0, ExtendedValue::Infinity(), true);
}

Cover Cover::Quadratic(int dim, ParameterDomain domain) {
  if (dim < 1 || dim > Vector::kMaxDimension) {
    throw PreconditionError("Cover: dimension must be in [1, 3]");
  }
  return Cover(dim, std::move(domain), family::Quadratic{});
}

Cover Cover::Norm(int dim, ParameterDomain domain) {
  if (dim < 1 || dim > Vector::kMaxDimension) {
    throw PreconditionError("Cover: dimension must be in [1, 3]");
  }
  return Cover(dim, std::move(domain), family::Norm{});
}

Cover Cover::Separable(ConvexFunction phi) {
  const int dim = phi.dim();
  return Cover(dim, ParameterDomain::MakeFiniteSet({1.0}),
               family::Separable{std::move(phi)});
}

Cover Cover::Tabulated(std::vector<family::Tabulated::Member> members) {
  if (members.empty()) throw PreconditionError("Cover: no tabulated members");
  const int dim = members.front().potential.dim();
  std::vector<Parameter> lambdas;
  for (const auto& m : members) {
    if (m.potential.dim() != dim || m.conjugate.dim() != dim) {
      throw DimensionMismatch("Cover: tabulated members differ in dimension");
    }
    lambdas.push_back(m.lambda);
  }
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  for (size_t i = 1; i < members.size(); ++i) {
    if (members[i].lambda == members[i - 1].lambda) {
      throw PreconditionError("Cover: duplicate tabulated lambda " +
                              members[i].lambda.ToString());
    }
  }
  return Cover(dim, ParameterDomain::MakeFiniteSet(std::move(lambdas)),
               family::Tabulated{std::move(members)});
}

ConvexFunction Cover::Potential(Parameter lambda) const {
  RequireInDomain(*this, lambda);
  return std::visit(
      Overloaded{
          [&](const family::Quadratic&) {
            if (lambda.is_infinite()) return ConvexFunction::IndicatorPoint(Vector::Zero(dim_));
            return ConvexFunction::Quadratic(dim_, lambda.value());
          },
          [&](const family::Norm&) {
            if (lambda.is_infinite()) return ConvexFunction::IndicatorPoint(Vector::Zero(dim_));
            return ConvexFunction::ScaledNorm(dim_, lambda.value());
          },
          [&](const family::Separable& s) { return s.phi; },
          [&](const family::Tabulated& t) { return MemberAt(t, lambda).potential; },
      },
      family_);
}

ConvexFunction Cover::DualPotential(Parameter lambda) const {
  RequireInDomain(*this, lambda);
  return std::visit(
      Overloaded{
          [&](const family::Quadratic&) {
            if (lambda.is_infinite()) return ConvexFunction::Quadratic(dim_, 0.0);
            if (lambda.value() == 0.0) {
              return ConvexFunction::IndicatorPoint(Vector::Zero(dim_));
            }
            return ConvexFunction::Quadratic(dim_, 1.0 / lambda.value());
          },
          [&](const family::Norm&) { return ConvexFunction::IndicatorBall(dim_, lambda); },
          [&](const family::Separable& s) { return Conjugate(s.phi); },
          [&](const family::Tabulated& t) { return MemberAt(t, lambda).conjugate; },
      },
      family_);
}

ExtendedValue FEval(const Cover& c, Parameter lambda, const Vector& x,
                    const Vector& y) {
  RequireDim(c, x);
  RequireDim(c, y);
  RequireInDomain(c, lambda);
  return FEvalUnchecked(c, lambda, x, y);
}

GridInfimum GridInf(const Cover& c, const Vector& x, const Vector& y) {
  RequireDim(c, x);
  RequireDim(c, y);
  const auto& grid = c.domain().sample_grid();
  double best = std::numeric_limits<double>::infinity();
  size_t arg = 0;
  auto consider = [&](size_t k, ExtendedValue f) {
    if (f.is_finite() && f.value() < best) {
      best = f.value();
      arg = k;
    }
  };
  // The built-in families skip most of the grid. Both evaluate the same
  // expressions as FEval, so the result equals a full scan.
  const auto first_finite = std::upper_bound(grid.begin(), grid.end(), Parameter(0.0));
  const auto end_finite = std::lower_bound(grid.begin(), grid.end(), Parameter::Infinity());
  if (c.Is<family::Quadratic>()) {
    const double sx = SquaredNorm(x);
    const double sy = SquaredNorm(y);
    if (sx == 0.0 || sy == 0.0 || first_finite == end_finite) {
      for (size_t k = 0; k < grid.size(); ++k) consider(k, FEvalUnchecked(c, grid[k], x, y));
    } else {
      // lambda -> f is strictly convex with its minimum at sqrt(sy / sx);
      // 0 and +inf give +inf here. Neighbors differ by far more than
      // rounding, so a small window around the bracket holds the minimizer.
      const auto at = std::lower_bound(first_finite, end_finite, Parameter(std::sqrt(sy / sx)));
      const auto lo = at - std::min<ptrdiff_t>(3, at - first_finite);
      const auto hi = at + std::min<ptrdiff_t>(3, end_finite - at);
      for (auto it = lo; it != hi; ++it) {
        const double l = it->value();
        const double f = (0.5 * l) * sx + (0.5 / l) * sy;
        if (f < best) {
          best = f;
          arg = size_t(it - grid.begin());
        }
      }
    }
  } else if (c.Is<family::Norm>()) {
    // f = lambda |x| on the ball constraint |y| <= lambda, so the first
    // feasible parameter is the first minimizer.
    const auto feasible = std::partition_point(grid.begin(), end_finite, [&](Parameter l) {
      return !InClosedBall(y, l);
    });
    if (feasible != end_finite) {
      consider(size_t(feasible - grid.begin()), feasible->value() * Norm(x));
    } else {
      for (auto it = end_finite; it != grid.end(); ++it) {
        consider(size_t(it - grid.begin()), FEvalUnchecked(c, *it, x, y));
      }
    }
  } else {
    for (size_t k = 0; k < grid.size(); ++k) consider(k, FEvalUnchecked(c, grid[k], x, y));
  }
  if (std::isinf(best)) return {ExtendedValue::Infinity(), grid.front()};
  return {best, grid[arg]};
}

CoverageReport CoverageCheck(const Cover& c, const LawGraph& m, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("CoverageCheck: tol must be > 0");
  if (m.dim() != c.dim()) {
    throw DimensionMismatch("CoverageCheck: law and cover differ in dimension");
  }
  CoverageReport report;
  report.lsc_assumed = c.lsc_assumed();

  std::vector<LawGraph::Pair> pairs = m.pairs();
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [x, y] : pairs) {
    const ExtendedValue inf = GridInf(c, x, y).value;
    if (inf.is_infinite() || inf.value() - Inner(x, y) > tol) {
      report.missed_pairs.emplace_back(x, y);
    }
  }

  const std::vector<Vector> xs = Domain(m);
  const std::vector<Vector> ys = Image(m);
  for (Parameter lambda : c.domain().sample_grid()) {
    for (const Vector& x : xs) {
      for (const Vector& y : ys) {
        if (InGraph(c, lambda, x, y, tol) && !m.Contains(x, y, tol)) {
          report.spurious_pairs.emplace_back(lambda, x, y);
        }
      }
    }
  }
  report.covered = report.missed_pairs.empty() && report.spurious_pairs.empty();
  return report;
}

namespace internal {

std::optional<Parameter> CandidateRule(const Cover& c, Side side, Parameter l1,
                                       Parameter l2, double alpha,
                                       const Vector& z1, const Vector& z2,
                                       const Vector& fixed, double tol) {
  if (alpha == 1.0) return l1;
  if (alpha == 0.0) return l2;
  const double beta = 1.0 - alpha;
  const Parameter arithmetic = Scale(alpha, l1) + Scale(beta, l2);
  std::optional<Parameter> out = std::visit(
      Overloaded{
          [&](const family::Quadratic&) -> std::optional<Parameter> {
            if (side == Side::kDual) return arithmetic;
            const ExtendedValue inv = Scale(alpha, Reciprocal(l1)) + Scale(beta, Reciprocal(l2));
            return Reciprocal(inv);
          },
          [&](const family::Norm&) -> std::optional<Parameter> {
            if (side == Side::kDual) return arithmetic;
            return Min(l1, l2);
          },
          [&](const family::Separable&) -> std::optional<Parameter> {
            return c.domain().sample_grid().front();
          },
          [&](const family::Tabulated&) -> std::optional<Parameter> {
            const Vector z = Combine(alpha, z1, z2);
            for (Parameter lambda : c.domain().sample_grid()) {
              const bool hit = side == Side::kPrimal ? InGraph(c, lambda, z, fixed, tol)
                                                     : InGraph(c, lambda, fixed, z, tol);
              if (hit) return lambda;
            }
            return std::nullopt;
          },
      },
      c.family());
  if (out && !c.domain().Contains(*out)) return std::nullopt;
  return out;
}

}  // namespace internal

namespace {

void CheckCandidateArgs(const Cover& c, Side side, Parameter l1, Parameter l2,
                        double alpha, const Vector& z1, const Vector& z2,
                        const Vector& fixed, double tol) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw PreconditionError("P1Candidate: alpha must be in [0, 1]");
  }
  if (!(tol > 0.0)) throw PreconditionError("P1Candidate: tol must be > 0");
  RequireDim(c, z1);
  RequireDim(c, z2);
  RequireDim(c, fixed);
  RequireInDomain(c, l1);
  RequireInDomain(c, l2);
  const char* name = side == Side::kPrimal ? "x" : "y";
  for (int i : {1, 2}) {
    const Parameter l = i == 1 ? l1 : l2;
    const Vector& z = i == 1 ? z1 : z2;
    const bool ok = side == Side::kPrimal ? InGraph(c, l, z, fixed, tol)
                                          : InGraph(c, l, fixed, z, tol);
    if (!ok) {
      throw PreconditionError(std::string("P1Candidate: ") + name + std::to_string(i) +
                              " = " + z.ToString() +
                              " is not in the subdifferential at lambda = " +
                              l.ToString());
    }
  }
}

}  // namespace

std::optional<Parameter> P1Candidate(const Cover& c, Parameter l1, Parameter l2,
                                     double alpha, const Vector& x1,
                                     const Vector& x2, const Vector& y,
                                     double tol) {
  CheckCandidateArgs(c, Side::kPrimal, l1, l2, alpha, x1, x2, y, tol);
  return internal::CandidateRule(c, Side::kPrimal, l1, l2, alpha, x1, x2, y, tol);
}

std::optional<Parameter> P1CandidateDual(const Cover& c, Parameter l1,
                                         Parameter l2, double alpha,
                                         const Vector& y1, const Vector& y2,
                                         const Vector& x, double tol) {
  CheckCandidateArgs(c, Side::kDual, l1, l2, alpha, y1, y2, x, tol);
  return internal::CandidateRule(c, Side::kDual, l1, l2, alpha, y1, y2, x, tol);
}

}  // namespace bipotkit
