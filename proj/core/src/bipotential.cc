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

#include "bipotkit/bipotential.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <utility>

namespace bipotkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kMidpointSnap = 1e-9;

using Grid = std::vector<std::vector<ExtendedValue>>;

std::string LscBasis(const Bipotential::Provenance& p) {
  return std::visit(
      Overloaded{
          [](const provenance::Separable&) {
            return std::string("closed form: phi(x) + phi*(y) of a closed convex phi");
          },
          [](const provenance::InfOfCover& i) {
            std::string s = "inherited from the cover: inf of a jointly lsc f over a compact "
                            "parameter space";
            if (i.cover.lsc_assumed()) s += " (assumed, tabulated family)";
            return s;
          },
          [](const provenance::BInfinity&) {
            return std::string("closed graph: the law is a finite sample");
          },
          [](const provenance::ClosedForm&) {
            return std::string("closed form: continuous");
          },
      },
      p);
}

// Index of the grid point within kMidpointSnap of each coordinate, keyed by
// rounded coordinates.
class SnapIndex {
 public:
  explicit SnapIndex(std::span<const Vector> grid) {
    for (size_t i = 0; i < grid.size(); ++i) index_.emplace(Key(grid[i]), int(i));
  }

  std::optional<int> Find(const Vector& v) const {
    auto it = index_.find(Key(v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  using KeyType = std::array<long long, Vector::kMaxDimension + 1>;

  static KeyType Key(const Vector& v) {
    KeyType k{};
    k[0] = v.dim();
    for (int i = 0; i < v.dim(); ++i) k[i + 1] = std::llround(v[i] / kMidpointSnap);
    return k;
  }

  std::map<KeyType, int> index_;
};

// Midpoint convexity of b along the first index of `values` (rows), for
// every fixed column. `flip` reports rows as y and columns as x.
void CheckMidpointConvexity(const Grid& values, std::span<const Vector> rows,
                            std::span<const Vector> cols, bool flip, double tol,
                            std::vector<AxiomCounterexample>& out) {
  const SnapIndex index(rows);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      const Vector mid = Midpoint(rows[i], rows[j]);
      const std::optional<int> k = index.Find(mid);
      if (!k) continue;
      for (size_t l = 0; l < cols.size(); ++l) {
        const ExtendedValue rhs = Scale(0.5, values[i][l] + values[j][l]);
        if (rhs.is_infinite()) continue;
        const ExtendedValue lhs = values[*k][l];
        double violation = 0.0;
        if (lhs.is_infinite()) {
          violation = kInfinity;
        } else if (lhs.value() - rhs.value() > tol) {
          violation = lhs.value() - rhs.value() - tol;
        } else {
          continue;
        }
        const Vector& r = rows[*k];
        const Vector& c = cols[l];
        out.push_back({Axiom::kSeparateConvexity, flip ? c : r, flip ? r : c, violation});
      }
    }
  }
}

Vector Combine(double alpha, const Vector& z1, const Vector& z2) {
  return alpha * z1 + (1.0 - alpha) * z2;
}

}  // namespace

Bipotential::Bipotential(int dim, Provenance provenance, Evaluator evaluator)
    : dim_(dim), provenance_(std::move(provenance)), evaluator_(std::move(evaluator)) {
  if (dim < 1 || dim > Vector::kMaxDimension) {
    throw PreconditionError("Bipotential: dimension must be in [1, 3]");
  }
}

Bipotential Bipotential::Separable(ConvexFunction phi) {
  const int dim = phi.dim();
  auto shared = std::make_shared<const ConvexFunction>(phi);
  return Bipotential(dim, provenance::Separable{std::move(phi)},
                     [shared](const Vector& x, const Vector& y) {
                       return Evaluate(*shared, x) + ConjugateAt(*shared, y);
                     });
}

Bipotential Bipotential::CauchyProduct(int dim) {
  return Bipotential(dim, provenance::ClosedForm{provenance::ClosedForm::Name::kCauchyProduct},
                     [](const Vector& x, const Vector& y) -> ExtendedValue {
                       return Norm(x) * Norm(y);
                     });
}

Bipotential Bipotential::DualityPairing(int dim) {
  return Bipotential(dim, provenance::ClosedForm{provenance::ClosedForm::Name::kDualityPairing},
                     [](const Vector& x, const Vector& y) -> ExtendedValue {
                       return Inner(x, y);
                     });
}

ExtendedValue Bipotential::operator()(const Vector& x, const Vector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) {
    throw DimensionMismatch("Bipotential: expected dimension " + std::to_string(dim_));
  }
  return evaluator_(x, y);
}

Bipotential BuildInf(const Cover& c, InfMode mode) {
  auto shared = std::make_shared<const Cover>(c);
  Bipotential::Evaluator eval;
  if (mode == InfMode::kGrid) {
    eval = [shared](const Vector& x, const Vector& y) { return GridInf(*shared, x, y).value; };
  } else if (c.Is<family::Quadratic>() || c.Is<family::Norm>()) {
    eval = [](const Vector& x, const Vector& y) -> ExtendedValue { return Norm(x) * Norm(y); };
  } else if (c.Is<family::Separable>()) {
    eval = [shared](const Vector& x, const Vector& y) {
      return FEval(*shared, shared->domain().sample_grid().front(), x, y);
    };
  } else {
    throw PreconditionError("BuildInf: no closed-form infimum for a tabulated cover");
  }
  return Bipotential(c.dim(), provenance::InfOfCover{c, mode}, std::move(eval));
}

NotBBGraph::NotBBGraph(BBReport report)
    : PreconditionError("law is not a BB-graph: slice at " +
                        report.failing_slice->at.ToString() +
                        " misses the midpoint " +
                        report.failing_slice->witness_midpoint.ToString()),
      report_(std::move(report)) {}

Bipotential BuildBInfinity(const LawGraph& m, double tol) {
  BBReport report = BBCheck(m, tol);
  if (!report.is_bb_graph) throw NotBBGraph(std::move(report));
  auto shared = std::make_shared<const LawGraph>(m);
  return Bipotential(m.dim(), provenance::BInfinity{m},
                     [shared, tol](const Vector& x, const Vector& y) -> ExtendedValue {
                       if (shared->Contains(x, y, tol)) return Inner(x, y);
                       return ExtendedValue::Infinity();
                     });
}

const char* AxiomName(Axiom a) {
  switch (a) {
    case Axiom::kSeparateConvexity:
      return "separate_convexity";
    case Axiom::kLowerBound:
      return "lower_bound";
    case Axiom::kGraphEquivalence:
      return "graph_equivalence";
  }
  return "unknown";
}

AxiomReport VerifyAxioms(const Bipotential& b, std::span<const Vector> x_grid,
                         std::span<const Vector> y_grid, double tol) {
  if (x_grid.empty() || y_grid.empty()) {
    throw PreconditionError("VerifyAxioms: grids must be nonempty");
  }
  if (!(tol > 0.0)) throw PreconditionError("VerifyAxioms: tol must be > 0");
  const size_t nx = x_grid.size();
  const size_t ny = y_grid.size();

  Grid values(nx, std::vector<ExtendedValue>(ny));
  Grid transposed(ny, std::vector<ExtendedValue>(nx));
  // gap[i][j] = b(x_i, y_j) - <x_i, y_j>, +inf where b is.
  std::vector<std::vector<double>> gap(nx, std::vector<double>(ny));
  for (size_t i = 0; i < nx; ++i) {
    for (size_t j = 0; j < ny; ++j) {
      const ExtendedValue v = b(x_grid[i], y_grid[j]);
      values[i][j] = v;
      transposed[j][i] = v;
      gap[i][j] = v.is_finite() ? v.value() - Inner(x_grid[i], y_grid[j]) : kInfinity;
    }
  }

  AxiomReport report;
  report.lsc_basis = LscBasis(b.provenance());

  std::vector<AxiomCounterexample> convexity;
  CheckMidpointConvexity(values, x_grid, y_grid, false, tol, convexity);
  CheckMidpointConvexity(transposed, y_grid, x_grid, true, tol, convexity);

  std::vector<AxiomCounterexample> lower;
  for (size_t i = 0; i < nx; ++i) {
    for (size_t j = 0; j < ny; ++j) {
      if (gap[i][j] < -tol) {
        lower.push_back({Axiom::kLowerBound, x_grid[i], y_grid[j], -tol - gap[i][j]});
      }
    }
  }

  std::vector<double> row_min(nx, kInfinity);
  std::vector<double> col_min(ny, kInfinity);
  for (size_t i = 0; i < nx; ++i) {
    for (size_t j = 0; j < ny; ++j) {
      row_min[i] = std::min(row_min[i], gap[i][j]);
      col_min[j] = std::min(col_min[j], gap[i][j]);
    }
  }
  std::vector<AxiomCounterexample> contact;
  for (size_t i = 0; i < nx; ++i) {
    if (row_min[i] > tol) {
      ++report.no_contact_x;
      continue;
    }
    const size_t j = std::find(gap[i].begin(), gap[i].end(), row_min[i]) - gap[i].begin();
    const double excess = gap[i][j] - col_min[j] - 2 * tol;
    if (excess > 0.0) {
      contact.push_back({Axiom::kGraphEquivalence, x_grid[i], y_grid[j], excess});
    }
  }
  for (size_t j = 0; j < ny; ++j) {
    if (col_min[j] > tol) {
      ++report.no_contact_y;
      continue;
    }
    size_t i = 0;
    while (gap[i][j] != col_min[j]) ++i;
    const double excess = gap[i][j] - row_min[i] - 2 * tol;
    if (excess > 0.0) {
      contact.push_back({Axiom::kGraphEquivalence, x_grid[i], y_grid[j], excess});
    }
  }

  report.separate_convexity_ok = convexity.empty();
  report.lower_bound_ok = lower.empty();
  report.graph_equivalence_ok = contact.empty();
  for (auto* part : {&convexity, &lower, &contact}) {
    report.counterexamples.insert(report.counterexamples.end(), part->begin(), part->end());
  }
  return report;
}

LawGraph GraphOfBipotential(const Bipotential& b, std::span<const Vector> x_grid,
                            std::span<const Vector> y_grid, double tol) {
  if (x_grid.empty() || y_grid.empty()) {
    throw PreconditionError("GraphOfBipotential: grids must be nonempty");
  }
  std::vector<LawGraph::Pair> pairs;
  for (const Vector& x : x_grid) {
    for (const Vector& y : y_grid) {
      const ExtendedValue v = b(x, y);
      if (v.is_finite() && v.value() - Inner(x, y) <= tol) pairs.emplace_back(x, y);
    }
  }
  if (pairs.empty()) {
    throw PreconditionError("GraphOfBipotential: no grid pair is a contact pair");
  }
  return LawGraph(std::move(pairs));
}

ProbePlan ProbePlan::FromLaw(const LawGraph& m, std::vector<Parameter> lambdas,
                             std::vector<double> alphas) {
  return {std::move(lambdas), std::move(alphas), Domain(m), Image(m)};
}

BicReport BicCheck(const Cover& c, const ProbePlan& plan, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("BicCheck: tol must be > 0");
  for (Parameter l : plan.lambdas) {
    if (!c.domain().Contains(l)) {
      throw PreconditionError("BicCheck: probe lambda " + l.ToString() +
                              " is outside the parameter domain");
    }
  }
  for (double a : plan.alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw PreconditionError("BicCheck: alpha outside [0, 1]");
  }
  const auto& grid = c.domain().sample_grid();

  BicReport report;
  for (Side side : {Side::kPrimal, Side::kDual}) {
    const bool primal = side == Side::kPrimal;
    const std::vector<Vector>& zs = primal ? plan.x_grid : plan.y_grid;
    const std::vector<Vector>& ws = primal ? plan.y_grid : plan.x_grid;
    auto f = [&](Parameter l, const Vector& z, const Vector& w) {
      return primal ? FEval(c, l, z, w) : FEval(c, l, w, z);
    };
    // table[l][i][w] = f(lambdas[l], zs[i], ws[w])
    std::vector<Grid> table(plan.lambdas.size(), Grid(zs.size(), std::vector<ExtendedValue>(ws.size())));
    for (size_t l = 0; l < plan.lambdas.size(); ++l) {
      for (size_t i = 0; i < zs.size(); ++i) {
        for (size_t w = 0; w < ws.size(); ++w) table[l][i][w] = f(plan.lambdas[l], zs[i], ws[w]);
      }
    }

    for (size_t l1 = 0; l1 < plan.lambdas.size(); ++l1) {
      for (size_t l2 = 0; l2 < plan.lambdas.size(); ++l2) {
        for (double alpha : plan.alphas) {
          const double beta = 1.0 - alpha;
          for (size_t i = 0; i < zs.size(); ++i) {
            for (size_t j = 0; j < zs.size(); ++j) {
              const Vector z = Combine(alpha, zs[i], zs[j]);
              for (size_t w = 0; w < ws.size(); ++w) {
                const ExtendedValue rhs =
                    Scale(alpha, table[l1][i][w]) + Scale(beta, table[l2][j][w]);
                if (rhs.is_infinite()) continue;
                const double bound = rhs.value() + tol;
                const std::optional<Parameter> cand = internal::CandidateRule(
                    c, side, plan.lambdas[l1], plan.lambdas[l2], alpha, zs[i], zs[j], ws[w],
                    tol);
                if (cand && f(*cand, z, ws[w]) <= bound) continue;
                double deficit = kInfinity;
                for (Parameter l : grid) {
                  const ExtendedValue v = f(l, z, ws[w]);
                  if (v.is_finite()) deficit = std::min(deficit, v.value() - rhs.value());
                  if (deficit <= tol) break;
                }
                if (deficit <= tol) continue;
                report.counterexamples.push_back({side, plan.lambdas[l1], zs[i],
                                                  plan.lambdas[l2], zs[j], alpha, ws[w],
                                                  deficit});
              }
            }
          }
        }
      }
    }
  }
  report.is_bic = report.counterexamples.empty();
  return report;
}

}  // namespace bipotkit
