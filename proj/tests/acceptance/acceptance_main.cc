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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and never read from flags.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bipotkit/bipotential.h"
#include "bipotkit/convex_function.h"
#include "bipotkit/cover.h"
#include "bipotkit/discrete_conjugate.h"
#include "bipotkit/law_graph.h"
#include "oracles.h"

namespace bipotkit {
namespace {

constexpr double kAnalyticTol = 1e-9;
constexpr double kGridTol = 1e-3;
constexpr double kTimeLimitSeconds = 5.0;
constexpr double kHarmonicTol = 1e-9;
constexpr double kCycleTol = 1e-9;
constexpr double kReconstructionGapTol = 1e-9;
constexpr double kFenchelYoungTol = 1e-9;
constexpr double kBiconjugateTol = 1e-12;
constexpr double kBicTol = 1e-9;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double NormOf(const Vector& v) { return std::sqrt(oracle::Dot(v, v)); }

std::vector<oracle::Pair> PairsOf(const LawGraph& m) { return m.pairs(); }

// Cauchy product reconstruction on the 41 x 41 probe grid over [-2, 2]^2.
// `attaining` gives a parameter where f(lambda, x, y) = |x| |y|.
Outcome CauchyReconstruction(const Cover& c,
                             const std::function<Parameter(const Vector&, const Vector&)>& attaining) {
  const std::vector<Vector> grid = ProductGrid(Linspace(-2.0, 2.0, 41), 2);
  const auto start = std::chrono::steady_clock::now();
  const Bipotential analytic = BuildInf(c, InfMode::kAnalytic);
  const Bipotential sampled = BuildInf(c, InfMode::kGrid);
  double analytic_err = 0.0;
  double attain_err = 0.0;
  double below = 0.0;
  double grid_err = 0.0;
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      const double expect = NormOf(x) * NormOf(y);
      const ExtendedValue a = analytic(x, y);
      const ExtendedValue g = sampled(x, y);
      const ExtendedValue f = FEval(c, attaining(x, y), x, y);
      if (!a.is_finite() || !g.is_finite() || !f.is_finite()) return {false, "infinite value"};
      analytic_err = std::max(analytic_err, std::abs(a.value() - expect));
      attain_err = std::max(attain_err, std::abs(f.value() - expect));
      // An infimum over a subset of the cover cannot undercut the true one.
      below = std::max(below, expect - g.value());
      grid_err = std::max(grid_err, std::abs(g.value() - a.value()));
    }
  }
  const double seconds = Seconds(start);
  const bool analytic_ok =
      analytic_err <= kAnalyticTol && attain_err <= kAnalyticTol && below <= kAnalyticTol;
  const bool grid_ok = grid_err <= kGridTol;
  const bool time_ok = seconds < kTimeLimitSeconds;
  return {analytic_ok && grid_ok && time_ok,
          Fmt("analytic max err %.3g, attained at lambda* to %.3g, grid undercut %.3g "
              "(all <= %.0e) [%s]; grid max err %.6g (<= %.0e) [%s]; %.2f s (< %.0f s) [%s]",
              analytic_err, attain_err, below, kAnalyticTol, analytic_ok ? "ok" : "FAIL",
              grid_err, kGridTol, grid_ok ? "ok" : "FAIL", seconds, kTimeLimitSeconds,
              time_ok ? "ok" : "FAIL")};
}

Outcome QuadraticCover() {
  return CauchyReconstruction(Cover::Quadratic(2), [](const Vector& x, const Vector& y) {
    if (x.IsZero()) return Parameter::Infinity();
    return Parameter(NormOf(y) / NormOf(x));
  });
}

Outcome NormCover() {
  return CauchyReconstruction(Cover::Norm(2), [](const Vector& x, const Vector& y) {
    if (x.IsZero()) return Parameter::Infinity();
    return Parameter(NormOf(y));
  });
}

// phi(x) + phi*(y) on dyadic probes: exact against the library's own
// potential and conjugate, and against hand-written closed forms.
Outcome SeparableRecovery() {
  const std::vector<Vector> grid = ProductGrid(Linspace(-2.0, 2.0, 17), 2);
  const std::vector<oracle::Piece> pieces = {
      {Vector{-1.0, 0.0}, 0.0}, {Vector{1.0, 0.5}, -0.5}, {Vector{0.0, -1.0}, 0.25},
      {Vector{0.5, 1.0}, -1.0}};
  std::vector<form::Affine> affine;
  for (const auto& p : pieces) affine.push_back({p.slope, p.offset});

  struct Case {
    const char* name;
    ConvexFunction phi;
    std::function<double(const Vector&)> value;
    std::function<double(const Vector&)> conjugate;
  };
  const std::vector<Case> cases = {
      {"quadratic(0.5)", ConvexFunction::Quadratic(2, 0.5),
       [](const Vector& x) { return 0.25 * oracle::Dot(x, x); },
       [](const Vector& y) { return oracle::Dot(y, y); }},
      {"quadratic(2)", ConvexFunction::Quadratic(2, 2.0),
       [](const Vector& x) { return oracle::Dot(x, x); },
       [](const Vector& y) { return 0.25 * oracle::Dot(y, y); }},
      {"scaled_norm(1.5)", ConvexFunction::ScaledNorm(2, 1.5),
       [](const Vector& x) { return 1.5 * NormOf(x); },
       [](const Vector& y) { return NormOf(y) <= 1.5 ? 0.0 : INFINITY; }},
      {"max_affine(4)", ConvexFunction::MaxAffine(affine),
       [&](const Vector& x) {
         double v = -INFINITY;
         for (const auto& p : pieces) v = std::max(v, oracle::Dot(p.slope, x) + p.offset);
         return v;
       },
       [&](const Vector& y) { return oracle::CaratheodoryConjugate(pieces, y); }},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const Bipotential b = BuildInf(Cover::Separable(c.phi), InfMode::kAnalytic);
    const Bipotential g = BuildInf(Cover::Separable(c.phi), InfMode::kGrid);
    double exact_err = 0.0;
    double oracle_err = 0.0;
    for (const auto& x : grid) {
      for (const auto& y : grid) {
        const ExtendedValue expect = Evaluate(c.phi, x) + ConjugateAt(c.phi, y);
        for (const ExtendedValue got : {b(x, y), g(x, y)}) {
          if (got != expect) {
            exact_err = got.is_finite() && expect.is_finite()
                            ? std::max(exact_err, std::abs(got.value() - expect.value()))
                            : INFINITY;
          }
        }
        const double o = c.value(x) + c.conjugate(y);
        if (std::isinf(o) != expect.is_infinite()) {
          oracle_err = INFINITY;
        } else if (!std::isinf(o)) {
          oracle_err = std::max(oracle_err, std::abs(o - expect.value()));
        }
      }
    }
    // The norm and the max-affine conjugate go through sqrt and a linear
    // program; everything else is exact on dyadic data.
    const bool case_ok = exact_err == 0.0 && oracle_err <= 1e-12;
    ok = ok && case_ok;
    detail += Fmt("%s%s err %.3g vs closed form %.3g", detail.empty() ? "" : "; ", c.name,
                  exact_err, oracle_err);
  }
  return {ok, detail + Fmt(" (%zu x %zu probes; need 0 and <= 1e-12)", grid.size(), grid.size())};
}

// Harmonic-mean parameter for gradient-paired points x_i = y / lambda_i.
Outcome HarmonicRule() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> log_lambda(std::log(1e-2), std::log(1e2));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<Vector> ys = ProductGrid(Linspace(-2.0, 2.0, 9), 2);
  std::uniform_int_distribution<size_t> pick(0, ys.size() - 1);
  const Cover c = Cover::Quadratic(2);
  auto f = [](double lambda, const Vector& x, const Vector& y) {
    return 0.5 * lambda * oracle::Dot(x, x) + 0.5 * oracle::Dot(y, y) / lambda;
  };
  double worst = -INFINITY;
  double worst_lambda_rel = 0.0;
  int missing = 0;
  for (int t = 0; t < 1000; ++t) {
    const double l1 = std::exp(log_lambda(rng));
    const double l2 = std::exp(log_lambda(rng));
    const double alpha = unit(rng);
    const double beta = 1.0 - alpha;
    const Vector y = ys[pick(rng)];
    const Vector x1 = (1.0 / l1) * y;
    const Vector x2 = (1.0 / l2) * y;
    const auto lambda = P1Candidate(c, l1, l2, alpha, x1, x2, y, kHarmonicTol);
    if (!lambda || !lambda->is_finite()) {
      ++missing;
      continue;
    }
    const double harmonic = 1.0 / (alpha / l1 + beta / l2);
    worst_lambda_rel = std::max(worst_lambda_rel, std::abs(lambda->value() - harmonic) / harmonic);
    const Vector x = alpha * x1 + beta * x2;
    const double lhs = f(harmonic, x, y);
    const double rhs = alpha * f(l1, x1, y) + beta * f(l2, x2, y);
    const ExtendedValue lib_lhs = FEval(c, *lambda, x, y);
    worst = std::max({worst, lhs - rhs, lib_lhs.ToDouble() - rhs});
  }
  const bool ok = missing == 0 && worst <= kHarmonicTol && worst_lambda_rel <= 1e-12;
  return {ok, Fmt("1000 tuples: max lhs - rhs %.3g (<= %.0e), candidate vs 1/(a/l1 + b/l2) "
                  "rel %.3g, %d without a candidate",
                  worst, kHarmonicTol, worst_lambda_rel, missing)};
}

// Bellman-Ford cycle detection against exhaustive simple-cycle enumeration.
Outcome CycleOracle() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_int_distribution<int> count(1, 7);
  std::uniform_int_distribution<int> dimension(1, 2);
  int disagreements = 0;
  int bad_witness = 0;
  int monotone = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = dimension(rng);
    const int k = count(rng);
    // Half of the laws are gradients of a random convex quadratic, so both
    // answers occur often.
    const bool gradient = t % 2 == 0;
    const double a = std::abs(coord(rng)), b = coord(rng) * 0.5, d = std::abs(coord(rng)) + 0.5;
    std::vector<oracle::Pair> pairs;
    for (int i = 0; i < k; ++i) {
      const Vector x = n == 1 ? Vector{coord(rng)} : Vector{coord(rng), coord(rng)};
      Vector y = x;
      if (gradient) {
        y = n == 1 ? Vector{a * x[0]} : Vector{a * x[0] + b * x[1], b * x[0] + d * x[1]};
      } else {
        y = n == 1 ? Vector{coord(rng)} : Vector{coord(rng), coord(rng)};
      }
      pairs.emplace_back(x, y);
    }
    const CycleReport got = CyclicMonotonicityCheck(LawGraph(pairs), kCycleTol);
    const oracle::CycleSearch expect = oracle::EnumerateCycles(pairs);
    const bool expect_monotone = k < 2 || expect.best_sum <= kCycleTol;
    monotone += expect_monotone;
    if (got.cyclically_monotone != expect_monotone) ++disagreements;
    if (!got.cyclically_monotone) {
      const auto& w = *got.witness_cycle;
      double sum = 0.0;
      for (size_t i = 0; i < w.size(); ++i) sum += oracle::Edge(pairs, w[i], w[(i + 1) % w.size()]);
      if (!(sum > kCycleTol)) ++bad_witness;
    }
  }
  const std::vector<oracle::Pair> antitone = {{Vector{0.0}, Vector{0.0}},
                                              {Vector{1.0}, Vector{-1.0}}};
  const CycleReport anti = CyclicMonotonicityCheck(LawGraph(antitone), kCycleTol);
  const bool anti_ok = !anti.cyclically_monotone && anti.witness_cycle &&
                       *anti.witness_cycle == std::vector<int>{0, 1} &&
                       oracle::Edge(antitone, 0, 1) + oracle::Edge(antitone, 1, 0) == 1.0;
  return {disagreements == 0 && bad_witness == 0 && anti_ok,
          Fmt("500 laws (%d monotone): %d disagreements, %d bad witnesses; antitone "
              "{(0,0),(1,-1)} rejected with cycle [0,1] of sum 1: %s",
              monotone, disagreements, bad_witness, anti_ok ? "yes" : "no")};
}

// Max-affine reconstruction from gradient samples.
Outcome Reconstruction() {
  struct Case {
    const char* name;
    ConvexFunction phi;
    std::vector<Vector> grid;
  };
  const std::vector<Vector> line = ProductGrid(Linspace(-2.0, 2.0, 9), 1);
  const std::vector<Vector> plane = ProductGrid(Linspace(-1.0, 1.0, 3), 2);
  const std::vector<Case> cases = {
      {"quadratic(1) 1-D", ConvexFunction::Quadratic(1, 1.0), line},
      {"quadratic(1) 1-D fine", ConvexFunction::Quadratic(1, 1.0),
       ProductGrid(Linspace(-1.9, 1.9, 20), 1)},
      {"scaled_norm(1) 1-D", ConvexFunction::ScaledNorm(1, 1.0), line},
      {"quadratic(1) 2-D", ConvexFunction::Quadratic(2, 1.0), plane},
      {"scaled_norm(1) 2-D", ConvexFunction::ScaledNorm(2, 1.0), plane},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const std::vector<oracle::Pair> pairs = GraphOf(c.phi, c.grid, c.grid, kAnalyticTol);
    if (pairs.size() > 20 || pairs.empty()) return {false, Fmt("%s: %zu samples", c.name, pairs.size())};
    const LawGraph m(pairs);
    const ConvexFunction hat = RockafellarReconstruct(m, 0, kCycleTol);
    const auto& pieces = hat.As<form::MaxAffine>()->pieces;
    double gap = 0.0;
    double oracle_gap = 0.0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      const auto& [x, y] = pairs[i];
      gap = std::max(gap, FenchelGap(hat, x, y, 1.0).gap.ToDouble());
      // y_i is a subgradient of the max at x_i when its own piece (slope
      // y_i) is active there.
      double top = -INFINITY;
      for (const auto& p : pieces) top = std::max(top, oracle::Dot(p.slope, x) + p.offset);
      if (!(pieces[i].slope == y)) return {false, Fmt("%s: piece %zu has the wrong slope", c.name, i)};
      oracle_gap = std::max(oracle_gap, top - (oracle::Dot(y, x) + pieces[i].offset));
    }
    const bool case_ok = gap <= kReconstructionGapTol && oracle_gap <= kReconstructionGapTol;
    ok = ok && case_ok;
    detail += Fmt("%s%s (%zu pairs) gap %.3g, oracle gap %.3g", detail.empty() ? "" : "; ",
                  c.name, pairs.size(), gap, oracle_gap);
  }

  // Chain sums against enumeration of all chains, every base, <= 7 pairs.
  int mismatches = 0;
  int laws = 0;
  for (const auto& c : cases) {
    std::vector<oracle::Pair> pairs = GraphOf(c.phi, c.grid, c.grid, kAnalyticTol);
    if (pairs.size() > 7) pairs.erase(pairs.begin() + 7, pairs.end());
    const LawGraph m(pairs);
    ++laws;
    for (int base = 0; base < int(pairs.size()); ++base) {
      const std::vector<double> got = LongestChainSums(m, base);
      const std::vector<double> expect = oracle::ChainSums(pairs, base);
      if (got != expect) ++mismatches;
      const ConvexFunction hat = RockafellarReconstruct(m, base, kCycleTol);
      const auto* pieces = hat.As<form::MaxAffine>();
      for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        if (!(pieces->pieces[i].slope == y) ||
            pieces->pieces[i].offset != expect[i] - oracle::Dot(x, y)) {
          ++mismatches;
        }
      }
    }
  }
  ok = ok && mismatches == 0;
  return {ok, detail + Fmt(" (<= %.0e); chain sums and offsets vs enumeration on %d laws, "
                           "every base: %d mismatches",
                           kReconstructionGapTol, laws, mismatches)};
}

// b_inf round trip on random graphs whose slices are singletons, and a
// refusal on a split slice.
Outcome BInfinity() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> tick(-8, 8);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<int> dimension(1, 2);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = dimension(rng);
    const int k = count(rng);
    std::vector<oracle::Pair> pairs;
    std::vector<Vector> xs, ys;
    auto draw = [&] {
      return n == 1 ? Vector{tick(rng) / 8.0} : Vector{tick(rng) / 8.0, tick(rng) / 8.0};
    };
    while (int(pairs.size()) < k) {
      const Vector x = draw();
      const Vector y = draw();
      if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
      if (std::find(ys.begin(), ys.end(), y) != ys.end()) continue;
      xs.push_back(x);
      ys.push_back(y);
      pairs.emplace_back(x, y);
    }
    const LawGraph m(pairs);
    const LawGraph back =
        GraphOfBipotential(BuildBInfinity(m), Domain(m), Image(m), kAnalyticTol);
    std::vector<oracle::Pair> expect = pairs;
    std::vector<oracle::Pair> got = back.pairs();
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (got != expect) ++failures;
  }

  bool refused = false;
  std::string witness = "none";
  try {
    BuildBInfinity(LawGraph({{Vector{0.0}, Vector{-1.0}}, {Vector{0.0}, Vector{1.0}}}));
  } catch (const NotBBGraph& e) {
    const auto& s = e.report().failing_slice;
    // Midpoint of the slice {-1, 1} at x = 0.
    refused = s && s->which == Side::kPrimal && s->at == Vector{0.0} &&
              s->witness_midpoint == Vector{0.5 * (-1.0 + 1.0)};
    if (s) witness = Fmt("slice at x=%g, midpoint %g", s->at[0], s->witness_midpoint[0]);
  }
  return {failures == 0 && refused,
          Fmt("100 random graphs: %d round-trip mismatches; {(0,-1),(0,1)} refused: %s (%s)",
              failures, refused ? "yes" : "no", witness.c_str())};
}

Outcome FenchelSuite() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> positive(0.1, 3.0);
  std::uniform_int_distribution<int> dimension(1, 3);
  std::uniform_int_distribution<int> kind(0, 5);
  auto random_vector = [&](int n) {
    std::vector<double> v(n);
    for (auto& c : v) c = coord(rng);
    return Vector(std::span<const double>(v));
  };
  double worst_gap = INFINITY;
  int finite = 0;
  for (int t = 0; t < 10000; ++t) {
    const int n = dimension(rng);
    Vector x = random_vector(n);
    const Vector y = random_vector(n);
    std::optional<ConvexFunction> phi;
    switch (kind(rng)) {
      case 0: phi = ConvexFunction::Quadratic(n, positive(rng)); break;
      case 1: phi = ConvexFunction::ScaledNorm(n, positive(rng)); break;
      case 2: {
        const double r = positive(rng);
        phi = ConvexFunction::IndicatorBall(n, r);
        if (t % 3 != 0) x = (r * std::min(1.0, 1.0 / (NormOf(x) + 1e-300))) * x;
        break;
      }
      case 3: {
        const Vector p = random_vector(n);
        phi = ConvexFunction::IndicatorPoint(p, coord(rng));
        if (t % 3 != 0) x = p;
        break;
      }
      case 4: phi = ConvexFunction::Affine(random_vector(n), coord(rng)); break;
      default: {
        std::vector<form::Affine> pieces;
        const int k = 1 + t % 5;
        for (int i = 0; i < k; ++i) pieces.push_back({random_vector(n), coord(rng)});
        phi = ConvexFunction::MaxAffine(pieces);
      }
    }
    const ExtendedValue gap = Evaluate(*phi, x) + ConjugateAt(*phi, y) - Inner(x, y);
    if (gap.is_finite()) {
      ++finite;
      worst_gap = std::min(worst_gap, gap.value());
    }
  }
  const bool fy_ok = worst_gap >= -kFenchelYoungTol;

  // Biconjugate of nonconvex samples, back on the primal grid.
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  double worst_excess = -INFINITY;
  for (int t = 0; t < 20; ++t) {
    const bool plane = t % 2 == 1;
    const std::vector<Vector> grid = plane ? ProductGrid(Linspace(-1.0, 1.0, 14), 2)
                                           : ProductGrid(Linspace(-1.0, 1.0, 200), 1);
    const std::vector<Vector> dual = plane ? ProductGrid(Linspace(-3.0, 3.0, 14), 2)
                                           : ProductGrid(Linspace(-3.0, 3.0, 150), 1);
    std::vector<ExtendedValue> values;
    for (size_t i = 0; i < grid.size(); ++i) values.push_back(value(rng));
    const ConvexFunction phi = ConvexFunction::Sampled(grid, values);
    const ConvexFunction bi = Conjugate(Conjugate(phi, dual), grid);
    for (size_t i = 0; i < grid.size(); ++i) {
      worst_excess =
          std::max(worst_excess, Evaluate(bi, grid[i]).ToDouble() - values[i].value());
    }
  }
  const bool bi_ok = worst_excess <= kBiconjugateTol;

  // Linear-time 1-D transform against the quadratic brute force and a plain
  // double loop.
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> size(1, 200);
    std::vector<double> gx(size(rng)), gy(size(rng));
    for (auto& v : gx) v = coord(rng);
    for (auto& v : gy) v = 2.0 * coord(rng);
    std::sort(gx.begin(), gx.end());
    std::sort(gy.begin(), gy.end());
    gx.erase(std::unique(gx.begin(), gx.end()), gx.end());
    gy.erase(std::unique(gy.begin(), gy.end()), gy.end());
    const std::vector<Vector> grid = ProductGrid(gx, 1);
    const std::vector<Vector> dual = ProductGrid(gy, 1);
    std::vector<ExtendedValue> values;
    for (size_t i = 0; i < grid.size(); ++i) {
      values.push_back(t % 4 == 0 && i % 7 == 3 ? ExtendedValue::Infinity()
                                                : ExtendedValue(value(rng)));
    }
    if (std::all_of(values.begin(), values.end(), [](auto v) { return v.is_infinite(); })) {
      values[0] = 0.0;
    }
    const auto fast = DiscreteConjugateLinear1D(grid, values, dual);
    const auto brute = DiscreteConjugateBruteForce(grid, values, dual);
    for (size_t j = 0; j < dual.size(); ++j) {
      double plain = -INFINITY;
      for (size_t i = 0; i < grid.size(); ++i) {
        if (values[i].is_finite()) plain = std::max(plain, gx[i] * gy[j] - values[i].value());
      }
      if (fast[j] != brute[j] || brute[j].ToDouble() != plain) ++mismatches;
    }
  }
  return {fy_ok && bi_ok && mismatches == 0,
          Fmt("Fenchel-Young min gap %.3g over %d finite of 10000 probes (>= -%.0e); "
              "biconjugate max excess %.3g (<= %.0e, 200 and 196 nodes); linear vs brute "
              "force on 200 grids: %d mismatches",
              worst_gap, finite, kFenchelYoungTol, worst_excess, kBiconjugateTol, mismatches)};
}

Outcome Bic() {
  const std::vector<Parameter> lambdas = {0.5, 1.0, 2.0, 4.0};
  const std::vector<double> alphas = {0.0, 0.25, 0.5, 1.0};
  bool ok = true;
  std::string detail;
  for (int n : {1, 2}) {
    const std::vector<Vector> grid = ProductGrid(Linspace(-2.0, 2.0, n == 1 ? 9 : 5), n);
    const ProbePlan plan{lambdas, alphas, grid, grid};
    const bool q = BicCheck(Cover::Quadratic(n), plan, kBicTol).is_bic;
    const bool m = BicCheck(Cover::Norm(n), plan, kBicTol).is_bic;
    ok = ok && q && m;
    detail += Fmt("%s%d-D quadratic %s, norm %s", detail.empty() ? "" : "; ", n,
                  q ? "BIC" : "not BIC", m ? "BIC" : "not BIC");
  }

  // Two quadratic members, lambda in {1, 4}: the harmonic mean of 1 and 4
  // is missing, so midpoints between the members have no witness.
  std::vector<family::Tabulated::Member> members;
  for (double l : {1.0, 4.0}) {
    members.push_back({l, ConvexFunction::Quadratic(1, l), ConvexFunction::Quadratic(1, 1.0 / l)});
  }
  const Cover control = Cover::Tabulated(members);
  const std::vector<Vector> grid = ProductGrid(Linspace(-2.0, 2.0, 9), 1);
  const BicReport r = BicCheck(control, {{1.0, 4.0}, alphas, grid, grid}, kBicTol);
  auto f = [](double l, double x, double y) { return 0.5 * l * x * x + 0.5 * y * y / l; };
  int finite = 0;
  double deficit_err = 0.0;
  for (const auto& c : r.counterexamples) {
    if (!std::isfinite(c.deficit) || !(c.deficit > kBicTol)) continue;
    ++finite;
    const double a = c.alpha;
    double rhs, best = INFINITY;
    if (c.side == Side::kPrimal) {
      rhs = a * f(c.lambda1.value(), c.z1[0], c.fixed[0]) +
            (1 - a) * f(c.lambda2.value(), c.z2[0], c.fixed[0]);
      const double z = a * c.z1[0] + (1 - a) * c.z2[0];
      for (double l : {1.0, 4.0}) best = std::min(best, f(l, z, c.fixed[0]) - rhs);
    } else {
      rhs = a * f(c.lambda1.value(), c.fixed[0], c.z1[0]) +
            (1 - a) * f(c.lambda2.value(), c.fixed[0], c.z2[0]);
      const double z = a * c.z1[0] + (1 - a) * c.z2[0];
      for (double l : {1.0, 4.0}) best = std::min(best, f(l, c.fixed[0], z) - rhs);
    }
    deficit_err = std::max(deficit_err, std::abs(best - c.deficit));
  }
  const bool control_ok = !r.is_bic && finite > 0 && finite == int(r.counterexamples.size()) &&
                          deficit_err <= 1e-12;
  return {ok && control_ok,
          detail + Fmt("; control {1, 4}: %s with %zu counterexamples, %d finite deficits "
                       "> %.0e, deficit vs hand computation %.3g",
                       r.is_bic ? "BIC" : "not BIC", r.counterexamples.size(), finite,
                       kBicTol, deficit_err)};
}

}  // namespace
}  // namespace bipotkit

int main() {
  using namespace bipotkit;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cauchy product from the quadratic cover", QuadraticCover},
      {"cauchy product from the norm cover", NormCover},
      {"separable recovery", SeparableRecovery},
      {"harmonic-mean parameter rule", HarmonicRule},
      {"cycle detection vs enumeration", CycleOracle},
      {"max-affine reconstruction", Reconstruction},
      {"b_inf round trip", BInfinity},
      {"Fenchel and biconjugate suite", FenchelSuite},
      {"BIC check", Bic},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), Seconds(start));
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
