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
#include <cmath>

#include <gtest/gtest.h>

#include "bipotkit/error.h"

namespace bipotkit {
namespace {

const ExtendedValue kInf = ExtendedValue::Infinity();

std::vector<Vector> Grid(double lo, double hi, int count, int dim) {
  return ProductGrid(Linspace(lo, hi, count), dim);
}

// Subdifferential of |x| with its vertical segment at 0 and horizontal rays
// at y = +-1.
LawGraph SignLaw() {
  std::vector<LawGraph::Pair> pairs;
  for (double x : {-2.0, -1.0}) pairs.emplace_back(Vector{x}, Vector{-1.0});
  for (double y : {-1.0, 0.0, 1.0}) pairs.emplace_back(Vector{0.0}, Vector{y});
  for (double x : {1.0, 2.0}) pairs.emplace_back(Vector{x}, Vector{1.0});
  return LawGraph(
      pairs, {{Side::kPrimal, Vector{0.0}, shape::Segment{Vector{-1.0}, Vector{1.0}}},
              {Side::kDual, Vector{1.0}, shape::Ray{Vector{0.0}, Vector{1.0}}},
              {Side::kDual, Vector{-1.0}, shape::Ray{Vector{0.0}, Vector{-1.0}}}});
}

TEST(BuildInfTest, ClosedFormExamples) {
  const Bipotential quad = BuildInf(Cover::Quadratic(2), InfMode::kAnalytic);
  EXPECT_EQ(quad(Vector{3.0, 0.0}, Vector{0.0, 4.0}), ExtendedValue(12.0));
  const Bipotential norm = BuildInf(Cover::Norm(2), InfMode::kAnalytic);
  EXPECT_EQ(norm(Vector{3.0, -7.0}, Vector{0.0, 0.0}), ExtendedValue(0.0));
  const Bipotential sep =
      BuildInf(Cover::Separable(ConvexFunction::Quadratic(1, 1.0)), InfMode::kAnalytic);
  EXPECT_EQ(sep(Vector{1.0}, Vector{2.0}), ExtendedValue(2.5));
  EXPECT_THROW(quad(Vector{1.0}, Vector{1.0}), DimensionMismatch);
}

TEST(BuildInfTest, GridModeExamples) {
  const Bipotential quad = BuildInf(Cover::Quadratic(2), InfMode::kGrid);
  EXPECT_NEAR(quad(Vector{3.0, 0.0}, Vector{0.0, 4.0}).value(), 12.0, 12.0 * 1e-4);
  const Bipotential norm = BuildInf(Cover::Norm(2), InfMode::kGrid);
  EXPECT_EQ(norm(Vector{3.0, -7.0}, Vector{0.0, 0.0}), ExtendedValue(0.0));
  EXPECT_EQ(norm(Vector{0.0, 0.0}, Vector{1e4, 0.0}), ExtendedValue(0.0));
}

TEST(BuildInfTest, TabulatedHasNoAnalyticMode) {
  const Cover c = Cover::Tabulated(
      {{1.0, ConvexFunction::Quadratic(1, 1.0), ConvexFunction::Quadratic(1, 1.0)}});
  EXPECT_THROW(BuildInf(c, InfMode::kAnalytic), PreconditionError);
  EXPECT_EQ(BuildInf(c, InfMode::kGrid)(Vector{1.0}, Vector{2.0}), ExtendedValue(2.5));
}

TEST(BuildInfTest, QuadraticGridAgreesWithAnalytic) {
  const auto g = Grid(-2, 2, 21, 2);
  const Bipotential grid = BuildInf(Cover::Quadratic(2), InfMode::kGrid);
  const Bipotential exact = BuildInf(Cover::Quadratic(2), InfMode::kAnalytic);
  const Bipotential cauchy = Bipotential::CauchyProduct(2);
  for (const auto& x : g) {
    for (const auto& y : g) {
      EXPECT_NEAR(grid(x, y).value(), exact(x, y).value(), 1e-3);
      EXPECT_EQ(exact(x, y), cauchy(x, y));
    }
  }
}

TEST(BuildInfTest, RefiningTheGridNeverIncreasesB) {
  const auto g = Grid(-2, 2, 9, 2);
  for (bool quadratic : {true, false}) {
    auto make = [&](int points) {
      const auto d = ParameterDomain::MakeInterval(0.0, kInf, true, {points, 1e-3, 1e3});
      return BuildInf(quadratic ? Cover::Quadratic(2, d) : Cover::Norm(2, d), InfMode::kGrid);
    };
    const Bipotential coarse = make(33);
    const Bipotential fine = make(65);
    for (const auto& x : g) {
      for (const auto& y : g) EXPECT_LE(fine(x, y), coarse(x, y));
    }
  }
}

TEST(BInfinityTest, SinglePair) {
  const Bipotential b = BuildBInfinity(LawGraph({{Vector{1.0}, Vector{2.0}}}));
  EXPECT_EQ(b(Vector{1.0}, Vector{2.0}), ExtendedValue(2.0));
  EXPECT_EQ(b(Vector{1.0}, Vector{3.0}), kInf);
}

TEST(BInfinityTest, RefusesNonBBGraphs) {
  try {
    BuildBInfinity(LawGraph({{Vector{0.0}, Vector{-1.0}}, {Vector{0.0}, Vector{1.0}}}));
    FAIL() << "expected NotBBGraph";
  } catch (const NotBBGraph& e) {
    EXPECT_FALSE(e.report().is_bb_graph);
    EXPECT_EQ(e.report().failing_slice->witness_midpoint, Vector{0.0});
  }
}

TEST(BInfinityTest, HonorsSliceHints) {
  const Bipotential b = BuildBInfinity(SignLaw());
  EXPECT_EQ(b(Vector{0.0}, Vector{0.25}), ExtendedValue(0.0));
  EXPECT_EQ(b(Vector{7.0}, Vector{1.0}), ExtendedValue(7.0));
  EXPECT_EQ(b(Vector{7.0}, Vector{-1.0}), kInf);
}

TEST(BInfinityTest, GraphRoundTrip) {
  const LawGraph m({{Vector{-1.0, 0.0}, Vector{-2.0, 0.5}},
                    {Vector{0.0, 0.0}, Vector{0.0, 0.0}},
                    {Vector{1.0, 1.0}, Vector{1.0, 2.0}}});
  const Bipotential b = BuildBInfinity(m);
  const std::vector<Vector> xs = Domain(m);
  const std::vector<Vector> ys = Image(m);
  const LawGraph back = GraphOfBipotential(b, xs, ys, 1e-9);
  auto sorted = m.pairs();
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(back.pairs(), sorted);
}

TEST(VerifyAxiomsTest, CauchyProductPasses) {
  const auto g = Grid(-2, 2, 5, 2);
  const AxiomReport r = VerifyAxioms(Bipotential::CauchyProduct(2), g, g, 1e-9);
  EXPECT_TRUE(r.lower_bound_ok);
  EXPECT_TRUE(r.separate_convexity_ok);
  EXPECT_TRUE(r.graph_equivalence_ok);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_FALSE(r.lsc_basis.empty());
}

TEST(VerifyAxiomsTest, DualityPairingIsADegenerateProbe) {
  const auto g = Grid(-2, 2, 5, 1);
  const AxiomReport r = VerifyAxioms(Bipotential::DualityPairing(1), g, g, 1e-9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.no_contact_x, 0);
}

TEST(VerifyAxiomsTest, BInfinityOfTheSignLawPasses) {
  const auto xs = Grid(-2, 2, 5, 1);
  const auto ys = Grid(-1, 1, 5, 1);
  const AxiomReport r = VerifyAxioms(BuildBInfinity(SignLaw()), xs, ys, 1e-9);
  EXPECT_TRUE(r.ok());
}

TEST(VerifyAxiomsTest, DetectsLowerBoundFailure) {
  const Bipotential bad(1, provenance::ClosedForm{provenance::ClosedForm::Name::kCauchyProduct},
                        [](const Vector& x, const Vector& y) -> ExtendedValue {
                          return 0.5 * Norm(x) * Norm(y);
                        });
  const auto g = Grid(-1, 1, 3, 1);
  const AxiomReport r = VerifyAxioms(bad, g, g, 1e-9);
  EXPECT_FALSE(r.lower_bound_ok);
  EXPECT_TRUE(r.separate_convexity_ok);
  ASSERT_FALSE(r.counterexamples.empty());
  EXPECT_EQ(r.counterexamples.front().axiom, Axiom::kLowerBound);
  EXPECT_NEAR(r.counterexamples.front().violation, 0.5 - 1e-9, 1e-15);
}

TEST(VerifyAxiomsTest, DetectsConvexityFailure) {
  // Finite only at the two ends of the x range: the midpoint is +inf.
  const Bipotential bad(1, provenance::ClosedForm{provenance::ClosedForm::Name::kCauchyProduct},
                        [](const Vector& x, const Vector& y) -> ExtendedValue {
                          if (x[0] == 0.0) return ExtendedValue::Infinity();
                          return Norm(x) * Norm(y);
                        });
  const auto g = Grid(-1, 1, 3, 1);
  const AxiomReport r = VerifyAxioms(bad, g, g, 1e-9);
  EXPECT_FALSE(r.separate_convexity_ok);
  EXPECT_TRUE(r.lower_bound_ok);
  EXPECT_TRUE(std::isinf(r.counterexamples.front().violation));
  EXPECT_EQ(r.counterexamples.front().x, Vector{0.0});
}

TEST(VerifyAxiomsTest, CountsRowsWithoutContact) {
  // phi(x) + phi*(y) for phi = x^2 / 2 touches <x, y> only on y = x.
  const Bipotential sep = Bipotential::Separable(ConvexFunction::Quadratic(1, 1.0));
  const AxiomReport r = VerifyAxioms(sep, Grid(-1, 1, 3, 1), Grid(5, 6, 2, 1), 1e-9);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.no_contact_x, 3);
  EXPECT_EQ(r.no_contact_y, 2);
}

TEST(GraphOfBipotentialTest, CauchyProductIn1D) {
  const auto g = Grid(-1, 1, 3, 1);
  const LawGraph m = GraphOfBipotential(Bipotential::CauchyProduct(1), g, g, 1e-9);
  std::vector<LawGraph::Pair> expected;
  for (auto [x, y] : std::vector<std::pair<double, double>>{
           {-1, -1}, {-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    expected.emplace_back(Vector{x}, Vector{y});
  }
  EXPECT_EQ(m.pairs(), expected);
}

TEST(GraphOfBipotentialTest, SeparableQuadraticIsTheDiagonal) {
  const auto g = Grid(-1, 1, 5, 1);
  const LawGraph m =
      GraphOfBipotential(Bipotential::Separable(ConvexFunction::Quadratic(1, 1.0)), g, g, 1e-9);
  ASSERT_EQ(m.size(), 5u);
  for (const auto& [x, y] : m.pairs()) EXPECT_EQ(x, y);
  EXPECT_THROW(GraphOfBipotential(Bipotential::Separable(ConvexFunction::Quadratic(1, 1.0)),
                                  Grid(-1, 1, 3, 1), Grid(5, 6, 2, 1), 1e-9),
               PreconditionError);
}

ProbePlan StandardPlan(int dim, int points) {
  return {{0.5, 1.0, 2.0, 4.0}, {0.0, 0.25, 0.5, 1.0}, Grid(-2, 2, points, dim),
          Grid(-2, 2, points, dim)};
}

TEST(BicCheckTest, BuiltInFamiliesAreBIC) {
  for (int dim : {1, 2}) {
    const ProbePlan plan = StandardPlan(dim, dim == 1 ? 9 : 3);
    EXPECT_TRUE(BicCheck(Cover::Quadratic(dim), plan, 1e-9).is_bic) << dim;
    EXPECT_TRUE(BicCheck(Cover::Norm(dim), plan, 1e-9).is_bic) << dim;
  }
}

TEST(BicCheckTest, SeparableIsBIC) {
  const ProbePlan plan{{1.0}, {0.0, 0.25, 0.5, 1.0}, Grid(-2, 2, 9, 1), Grid(-2, 2, 9, 1)};
  for (const ConvexFunction& phi :
       {ConvexFunction::Quadratic(1, 2.0), ConvexFunction::ScaledNorm(1, 1.0),
        ConvexFunction::MaxAffine({{Vector{-1.0}, 0.0}, {Vector{1.0}, -1.0}})}) {
    EXPECT_TRUE(BicCheck(Cover::Separable(phi), plan, 1e-9).is_bic);
  }
}

TEST(BicCheckTest, TwoQuadraticsAreNotBIC) {
  const Cover c = Cover::Tabulated({
      {1.0, ConvexFunction::Quadratic(1, 1.0), ConvexFunction::Quadratic(1, 1.0)},
      {4.0, ConvexFunction::Quadratic(1, 4.0), ConvexFunction::Quadratic(1, 0.25)},
  });
  const ProbePlan plan{{1.0, 4.0}, {0.5}, Grid(-2, 2, 9, 1), Grid(-2, 2, 9, 1)};
  const BicReport r = BicCheck(c, plan, 1e-9);
  EXPECT_FALSE(r.is_bic);
  ASSERT_FALSE(r.counterexamples.empty());
  for (const auto& ce : r.counterexamples) {
    EXPECT_GT(ce.deficit, 1e-9);
    EXPECT_TRUE(std::isfinite(ce.deficit));
  }
}

TEST(BicCheckTest, RejectsProbesOutsideTheDomain) {
  const Cover c = Cover::Separable(ConvexFunction::Quadratic(1, 1.0));
  const ProbePlan plan{{2.0}, {0.5}, Grid(-1, 1, 3, 1), Grid(-1, 1, 3, 1)};
  EXPECT_THROW(BicCheck(c, plan, 1e-9), PreconditionError);
}

}  // namespace
}  // namespace bipotkit
