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

#include "bipotkit_cli/demos.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace bipotkit::cli {
namespace {

using Reference = std::function<ExtendedValue(const Vector&, const Vector&)>;

std::vector<Vector> EveryOtherNode(const std::vector<double>& nodes) {
  std::vector<double> half;
  for (size_t i = 0; i < nodes.size(); i += 2) half.push_back(nodes[i]);
  return ProductGrid(half, 2);
}

double MaxError(const Bipotential& b, const Reference& ref, std::span<const Vector> xs,
                std::span<const Vector> ys) {
  double worst = 0.0;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const ExtendedValue u = b(x, y);
      const ExtendedValue v = ref(x, y);
      if (u.is_infinite() || v.is_infinite()) {
        if (u != v) return INFINITY;
        continue;
      }
      worst = std::max(worst, std::abs(u.value() - v.value()));
    }
  }
  return worst;
}

ExtendedValue CauchyReference(const Vector& x, const Vector& y) { return Norm(x) * Norm(y); }

// Nearest sample of the domain's grid to each target.
std::vector<Parameter> NearestSamples(const Cover& c, std::initializer_list<double> targets) {
  std::vector<Parameter> out;
  for (double t : targets) {
    Parameter best = c.domain().sample_grid().front();
    for (auto l : c.domain().sample_grid()) {
      if (l.is_finite() &&
          std::abs(std::log(l.value() / t)) < std::abs(std::log(best.value() / t))) {
        best = l;
      }
    }
    out.push_back(best);
  }
  return out;
}

DemoRun Finish(std::string name, Cover cover, LawGraph law, std::vector<Vector> x_grid,
               std::vector<Vector> y_grid, const ProbePlan& plan, std::string reference,
               const Reference& ref, double tol) {
  CoverageReport coverage = CoverageCheck(cover, law, tol);
  BicReport bic = BicCheck(cover, plan, tol);
  Bipotential b_analytic = BuildInf(cover, InfMode::kAnalytic);
  Bipotential b_grid = BuildInf(cover, InfMode::kGrid);
  AxiomReport axioms = VerifyAxioms(b_analytic, x_grid, y_grid, tol);
  LawGraph graph = GraphOfBipotential(b_analytic, x_grid, y_grid, tol);
  const double err_a = MaxError(b_analytic, ref, x_grid, y_grid);
  const double err_g = MaxError(b_grid, ref, x_grid, y_grid);
  return DemoRun{std::move(name), std::move(cover),      std::move(law),
                 std::move(x_grid), std::move(y_grid),   std::move(coverage),
                 std::move(bic),    std::move(axioms),   std::move(b_analytic),
                 std::move(b_grid), std::move(graph),    std::move(reference),
                 err_a,             err_g};
}

DemoRun CauchyDemo(const std::string& name, Cover cover, const std::vector<double>& nodes,
                   double tol) {
  std::vector<Vector> grid = ProductGrid(nodes, 2);
  LawGraph law = GraphOfBipotential(Bipotential::CauchyProduct(2), grid, grid, tol);
  const std::vector<Vector> probe = EveryOtherNode(nodes);
  const ProbePlan plan{ProbeLambdas(cover), kProbeAlphas, probe, probe};
  return Finish(name, std::move(cover), std::move(law), grid, grid, plan, "‖x‖‖y‖",
                CauchyReference, tol);
}

// Perfect plasticity with a circular yield surface of radius r: the stress y
// lies in the ball, and a nonzero strain rate x is an outward multiple of y
// on the surface. The law collects several radii, each of them a member of
// the norm cover, so the radii are taken from the sample grid.
DemoRun PlasticityDemo(double tol) {
  Cover cover = Cover::Norm(2);
  const std::vector<Parameter> radii = NearestSamples(cover, {0.5, 1.0, 2.0});
  std::vector<Vector> strains = {Vector::Zero(2)};
  std::vector<Vector> stresses;
  for (int k = 0; k < 8; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 8;
    const Vector u{std::cos(t), std::sin(t)};
    for (double eta : {0.5, 1.0, 2.0}) strains.push_back(eta * u);
    for (auto r : radii) stresses.push_back(r.value() * u);
  }
  LawGraph law = GraphOfBipotential(Bipotential::CauchyProduct(2), strains, stresses, tol);
  ProbePlan plan = ProbePlan::FromLaw(law, radii, kProbeAlphas);
  std::vector<Vector> x_grid = plan.x_grid;
  std::vector<Vector> y_grid = plan.y_grid;
  return Finish("plasticity", std::move(cover), std::move(law), std::move(x_grid),
                std::move(y_grid), plan, "‖x‖‖y‖", CauchyReference, tol);
}

DemoRun SeparableDemo(const std::vector<double>& nodes, double tol) {
  const ConvexFunction phi = ConvexFunction::Quadratic(2, 1.0);
  std::vector<Vector> grid = ProductGrid(nodes, 2);
  LawGraph law(GraphOf(phi, grid, grid, tol));
  Cover cover = Cover::Separable(phi);
  const std::vector<Vector> probe = EveryOtherNode(nodes);
  const ProbePlan plan{ProbeLambdas(cover), kProbeAlphas, probe, probe};
  auto ref = [phi](const Vector& x, const Vector& y) {
    return Evaluate(phi, x) + ConjugateAt(phi, y);
  };
  return Finish("separable", std::move(cover), std::move(law), grid, grid, plan,
                "(φ(x) + φ*(y))", ref, tol);
}

const char* FamilyName(const Cover& c) {
  if (c.Is<family::Quadratic>()) return "quadratic";
  if (c.Is<family::Norm>()) return "norm";
  if (c.Is<family::Separable>()) return "separable";
  return "tabulated";
}

const char* PassFail(bool ok) { return ok ? "pass" : "FAIL"; }

bool SamePairs(const LawGraph& a, const LawGraph& b) {
  auto pa = a.pairs();
  auto pb = b.pairs();
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

}  // namespace

std::vector<Parameter> ProbeLambdas(const Cover& c) {
  const auto& grid = c.domain().sample_grid();
  if (grid.size() <= 8) return grid;
  std::vector<Parameter> out;
  for (double l : {0.5, 1.0, 2.0, 4.0}) {
    if (c.domain().Contains(l)) out.push_back(l);
  }
  return out;
}

std::vector<std::string> DemoNames() {
  return {"cauchy-quadratic", "cauchy-norm", "plasticity", "separable"};
}

std::optional<DemoRun> RunDemo(const std::string& name, const std::vector<double>& nodes,
                               double tol) {
  if (name == "cauchy-quadratic") return CauchyDemo(name, Cover::Quadratic(2), nodes, tol);
  if (name == "cauchy-norm") return CauchyDemo(name, Cover::Norm(2), nodes, tol);
  if (name == "plasticity") return PlasticityDemo(tol);
  if (name == "separable") return SeparableDemo(nodes, tol);
  return std::nullopt;
}

Json DemoReport(const DemoRun& run) {
  Json j;
  j["demo"] = run.name;
  j["family"] = FamilyName(run.cover);
  j["law_pairs"] = run.law.size();
  j["grid"] = Json::array({run.x_grid.size(), run.y_grid.size()});
  j["coverage"] = ToJson(run.coverage);
  j["bic"] = ToJson(run.bic);
  j["axioms"] = ToJson(run.axioms);
  j["graph_pairs"] = run.graph.size();
  j["graph_equals_law"] = SamePairs(run.graph, run.law);
  j["reference"] = run.reference;
  j["max_error_analytic"] = run.max_error_analytic;
  j["max_error_grid"] = run.max_error_grid;
  j["ok"] = run.ok();
  return j;
}

std::string DemoTranscript(const DemoRun& run) {
  std::ostringstream os;
  const auto& a = run.axioms;
  os << "demo " << run.name << '\n';
  os << "cover: " << FamilyName(run.cover) << ", " << run.cover.domain().sample_grid().size()
     << " lambda samples\n";
  os << "law: " << run.law.size() << " pairs, probe grid " << run.x_grid.size() << " x "
     << run.y_grid.size() << '\n';
  os << "coverage: " << PassFail(run.coverage.covered) << " (missed "
     << run.coverage.missed_pairs.size() << ", spurious " << run.coverage.spurious_pairs.size()
     << ")\n";
  os << "bic: " << PassFail(run.bic.is_bic) << " (" << run.bic.counterexamples.size()
     << " counterexamples)\n";
  os << "axioms: " << PassFail(a.ok()) << " (lower bound " << PassFail(a.lower_bound_ok)
     << ", separate convexity " << PassFail(a.separate_convexity_ok) << ", graph equivalence "
     << PassFail(a.graph_equivalence_ok) << "; no contact rows " << a.no_contact_x
     << ", columns " << a.no_contact_y << ")\n";
  os << "graph of b: " << run.graph.size() << " pairs, "
     << (SamePairs(run.graph, run.law) ? "equal to" : "different from") << " the law\n";
  os << "max |b_analytic − " << run.reference
     << "| = " << FormatNumber(run.max_error_analytic) << '\n';
  os << "max |b − " << run.reference << "| = " << FormatNumber(run.max_error_grid) << '\n';
  return os.str();
}

}  // namespace bipotkit::cli
