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

#ifndef BIPOTKIT_BIPOTENTIAL_H_
#define BIPOTKIT_BIPOTENTIAL_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bipotkit/convex_function.h"
#include "bipotkit/cover.h"
#include "bipotkit/error.h"
#include "bipotkit/law_graph.h"
#include "bipotkit/vector.h"

namespace bipotkit {

enum class InfMode { kAnalytic, kGrid };

namespace provenance {
struct Separable {
  ConvexFunction phi;
};
struct InfOfCover {
  Cover cover;
  InfMode mode;
};
struct BInfinity {
  LawGraph law;
};
struct ClosedForm {
  enum class Name {
    kCauchyProduct,   // |x| |y|
    kDualityPairing,  // <x, y>, a degenerate probe, not a bipotential
  };
  Name name;
};
}  // namespace provenance

// A function b : X x Y -> R u {+inf} with the recipe it came from.
class Bipotential {
 public:
  using Provenance = std::variant<provenance::Separable, provenance::InfOfCover,
                                  provenance::BInfinity, provenance::ClosedForm>;
  using Evaluator = std::function<ExtendedValue(const Vector&, const Vector&)>;

  Bipotential(int dim, Provenance provenance, Evaluator evaluator);

  // phi(x) + phi*(y).
  static Bipotential Separable(ConvexFunction phi);
  static Bipotential CauchyProduct(int dim);
  static Bipotential DualityPairing(int dim);

  int dim() const { return dim_; }
  const Provenance& provenance() const { return provenance_; }

  // Throws DimensionMismatch on vectors of the wrong dimension.
  ExtendedValue operator()(const Vector& x, const Vector& y) const;

 private:
  int dim_;
  Provenance provenance_;
  Evaluator evaluator_;
};

// b(x, y) = inf over the cover of f(lambda, x, y). Analytic mode uses the
// closed-form infimum: |x| |y| for the quadratic and norm families, and
// phi(x) + phi*(y) for a separable cover; it throws PreconditionError for
// tabulated covers. Grid mode takes the minimum over the sample grid.
Bipotential BuildInf(const Cover& c, InfMode mode);

class NotBBGraph : public PreconditionError {
 public:
  explicit NotBBGraph(BBReport report);
  const BBReport& report() const { return report_; }

 private:
  BBReport report_;
};

// <x, y> on the law (hinted slices included, within tol) and +inf
// elsewhere. Throws NotBBGraph with the midpoint witness.
Bipotential BuildBInfinity(const LawGraph& m, double tol = kAnalyticTolerance);

enum class Axiom {
  kSeparateConvexity,  // (a)
  kLowerBound,         // (b)
  kGraphEquivalence,   // (c)
};

const char* AxiomName(Axiom a);

struct AxiomCounterexample {
  Axiom axiom;
  Vector x;
  Vector y;
  // Amount by which the inequality fails; +inf when b = +inf on the left
  // of a midpoint inequality whose right side is finite.
  double violation;
};

struct AxiomReport {
  bool lower_bound_ok = true;
  bool separate_convexity_ok = true;
  bool graph_equivalence_ok = true;
  std::vector<AxiomCounterexample> counterexamples;
  // Grid rows (fixed x) and columns (fixed y) whose minimal gap exceeds
  // tol: the grid misses the contact point. Not a failure.
  int no_contact_x = 0;
  int no_contact_y = 0;
  // Why b is taken to be lower semicontinuous; not tested numerically.
  std::string lsc_basis;

  bool ok() const {
    return lower_bound_ok && separate_convexity_ok && graph_equivalence_ok;
  }
};

// Sampled axiom checks over x_grid x y_grid:
//  (b) b(x, y) - <x, y> >= -tol everywhere;
//  (a) b(mid, y) <= (b(x1, y) + b(x2, y)) / 2 + tol whenever the midpoint of
//      x1, x2 is a grid point (within 1e-9), and symmetrically in y;
//  (c) in each row and column, a grid minimizer of the gap with gap <= tol
//      must also minimize the gap along the crossing line within 2 tol.
// Counterexamples are ordered by axiom, then grid index.
AxiomReport VerifyAxioms(const Bipotential& b, std::span<const Vector> x_grid,
                         std::span<const Vector> y_grid, double tol);

// M(b): grid pairs with b(x, y) - <x, y> <= tol, in lexicographic grid
// order. Throws PreconditionError if no pair qualifies.
LawGraph GraphOfBipotential(const Bipotential& b, std::span<const Vector> x_grid,
                            std::span<const Vector> y_grid, double tol);

// Tuples probed by BicCheck. Primal side: every (l1, l2) in lambdas^2, alpha
// in alphas, (x1, x2) in x_grid^2 and y in y_grid. Dual side: the same with
// (y1, y2) in y_grid^2 and x in x_grid.
struct ProbePlan {
  std::vector<Parameter> lambdas;
  std::vector<double> alphas;
  std::vector<Vector> x_grid;
  std::vector<Vector> y_grid;

  // Grids taken from the law's domain and image.
  static ProbePlan FromLaw(const LawGraph& m, std::vector<Parameter> lambdas,
                           std::vector<double> alphas);
};

struct BicCounterexample {
  // kPrimal: z are x values and `fixed` is y; kDual the other way round.
  Side side;
  Parameter lambda1;
  Vector z1;
  Parameter lambda2;
  Vector z2;
  double alpha;
  Vector fixed;
  // min over the sample grid of f(lambda, combination) - right-hand side.
  double deficit;
};

struct BicReport {
  bool is_bic = true;
  std::vector<BicCounterexample> counterexamples;
};

// Implicit convexity of f in each argument. Per tuple with a finite
// right-hand side (0 * inf = 0), the family's candidate rule is tried
// first, then every sample parameter. Throws PreconditionError if a probe
// lambda is outside the domain.
BicReport BicCheck(const Cover& c, const ProbePlan& plan, double tol);

}  // namespace bipotkit

#endif  // BIPOTKIT_BIPOTENTIAL_H_
