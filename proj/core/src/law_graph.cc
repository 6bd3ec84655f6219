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

#include "bipotkit/law_graph.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace bipotkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Distance from p to {origin + t d : lo <= t <= hi}.
double DistanceToLine(const Vector& p, const Vector& origin, const Vector& d,
                      double lo, double hi) {
  const double dd = SquaredNorm(d);
  if (dd == 0.0) return Distance(p, origin);
  const double t = std::clamp(Inner(p - origin, d) / dd, lo, hi);
  return Distance(p, origin + t * d);
}

double HintTolerance(const Vector& p) {
  return 1e-9 * std::max(1.0, Norm(p));
}

std::vector<Vector> SortedUnique(std::vector<Vector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Some member of `members` lies within tol of the midpoint of every pair of
// members. Returns the first failing midpoint.
std::optional<Vector> MidpointClosureFailure(const std::vector<Vector>& members,
                                             double tol) {
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const Vector mid = Midpoint(members[i], members[j]);
      const bool hit = std::any_of(members.begin(), members.end(),
                                   [&](const Vector& w) { return Distance(w, mid) <= tol; });
      if (!hit) return mid;
    }
  }
  return std::nullopt;
}

using Matrix = std::vector<std::vector<double>>;

Matrix WeightMatrix(const LawGraph& m) {
  const int n = int(m.size());
  Matrix w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) w[i][j] = ChainWeight(m, i, j);
    }
  }
  return w;
}

// Looks for a cycle in the predecessor graph whose cost is negative.
std::optional<std::vector<int>> CycleInPredecessors(const std::vector<int>& pred,
                                                    const Matrix& cost) {
  const int n = int(pred.size());
  std::vector<int> stamp(n, -1);
  for (int s = 0; s < n; ++s) {
    int v = s;
    while (v >= 0 && stamp[v] < 0) {
      stamp[v] = s;
      v = pred[v];
    }
    if (v < 0 || stamp[v] != s) continue;
    // v is on a cycle discovered in this walk. Walking predecessors lists
    // the cycle backwards.
    std::vector<int> cycle{v};
    for (int u = pred[v]; u != v; u = pred[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    double total = 0.0;
    for (size_t t = 0; t < cycle.size(); ++t) {
      total += cost[cycle[t]][cycle[(t + 1) % cycle.size()]];
    }
    if (total < 0.0) return cycle;
  }
  return std::nullopt;
}

// Bellman-Ford from a virtual source joined to every node with cost 0.
std::optional<std::vector<int>> FindNegativeCycle(const Matrix& cost) {
  const int n = int(cost.size());
  std::vector<double> dist(n, 0.0);
  std::vector<int> pred(n, -1);
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double cand = dist[u] + cost[u][v];
        if (cand < dist[v]) {
          dist[v] = cand;
          pred[v] = u;
          changed = true;
        }
      }
    }
    if (!changed) return std::nullopt;
  }
  return CycleInPredecessors(pred, cost);
}

Matrix ShiftedNegation(const Matrix& w, double shift) {
  Matrix c = w;
  for (auto& row : c) {
    for (auto& x : row) x = -x + shift;
  }
  return c;
}

std::vector<int> RotateToSmallest(std::vector<int> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

bool SliceHint::Contains(const Vector& p, double tol) const {
  return std::visit(
      Overloaded{
          [&](const shape::Singleton& s) { return Distance(p, s.point) <= tol; },
          [&](const shape::Segment& s) {
            return DistanceToLine(p, s.from, s.to - s.from, 0.0, 1.0) <= tol;
          },
          [&](const shape::Ball& b) {
            if (b.radius.is_infinite()) return true;
            return Distance(p, b.center) <= b.radius.value() + tol;
          },
          [&](const shape::Ray& r) {
            return DistanceToLine(p, r.origin, r.direction, 0.0,
                                  std::numeric_limits<double>::infinity()) <= tol;
          },
      },
      shape);
}

int SliceHint::dim() const {
  return std::visit(
      Overloaded{
          [](const shape::Singleton& s) { return s.point.dim(); },
          [](const shape::Segment& s) {
            CheckSameDimension(s.from, s.to);
            return s.from.dim();
          },
          [](const shape::Ball& b) {
            if (b.radius < 0.0) throw PreconditionError("Ball hint: negative radius");
            return b.center.dim();
          },
          [](const shape::Ray& r) {
            CheckSameDimension(r.origin, r.direction);
            return r.origin.dim();
          },
      },
      shape);
}

LawGraph::LawGraph(std::vector<Pair> pairs, std::vector<SliceHint> hints)
    : pairs_(std::move(pairs)), hints_(std::move(hints)) {
  if (pairs_.empty()) throw PreconditionError("LawGraph: pairs must be nonempty");
  dim_ = pairs_.front().first.dim();
  for (const auto& [x, y] : pairs_) {
    if (x.dim() != dim_ || y.dim() != dim_) {
      throw DimensionMismatch("LawGraph: all vectors must share one dimension");
    }
  }
  for (size_t h = 0; h < hints_.size(); ++h) {
    const SliceHint& hint = hints_[h];
    if (hint.at.dim() != dim_ || hint.dim() != dim_) {
      throw DimensionMismatch("LawGraph: slice hint dimension mismatch");
    }
    for (size_t g = 0; g < h; ++g) {
      if (hints_[g].side == hint.side && hints_[g].at == hint.at) {
        throw PreconditionError("LawGraph: two hints for the same slice at " +
                                hint.at.ToString());
      }
    }
    for (const auto& [x, y] : pairs_) {
      const bool primal = hint.side == Side::kPrimal;
      const Vector& key = primal ? x : y;
      const Vector& member = primal ? y : x;
      if (key == hint.at && !hint.Contains(member, HintTolerance(member))) {
        throw PreconditionError("LawGraph: stored pair (" + x.ToString() + ", " +
                                y.ToString() + ") lies outside the hinted slice");
      }
    }
  }
}

const SliceHint* LawGraph::HintAt(Side side, const Vector& at) const {
  for (const auto& h : hints_) {
    if (h.side == side && h.at == at) return &h;
  }
  return nullptr;
}

bool LawGraph::Contains(const Vector& x, const Vector& y, double tol) const {
  for (const auto& [px, py] : pairs_) {
    if (px == x && py == y) return true;
  }
  if (const SliceHint* h = HintAt(Side::kPrimal, x); h && h->Contains(y, tol)) {
    return true;
  }
  if (const SliceHint* h = HintAt(Side::kDual, y); h && h->Contains(x, tol)) {
    return true;
  }
  return false;
}

std::vector<Vector> Slice(const LawGraph& m, const Vector& x) {
  std::vector<Vector> out;
  for (const auto& [px, py] : m.pairs()) {
    if (px == x) out.push_back(py);
  }
  return SortedUnique(std::move(out));
}

std::vector<Vector> DualSlice(const LawGraph& m, const Vector& y) {
  std::vector<Vector> out;
  for (const auto& [px, py] : m.pairs()) {
    if (py == y) out.push_back(px);
  }
  return SortedUnique(std::move(out));
}

std::vector<Vector> Domain(const LawGraph& m) {
  std::vector<Vector> out;
  out.reserve(m.size());
  for (const auto& p : m.pairs()) out.push_back(p.first);
  return SortedUnique(std::move(out));
}

std::vector<Vector> Image(const LawGraph& m) {
  std::vector<Vector> out;
  out.reserve(m.size());
  for (const auto& p : m.pairs()) out.push_back(p.second);
  return SortedUnique(std::move(out));
}

BBReport BBCheck(const LawGraph& m, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("BBCheck: tol must be > 0");
  for (Side side : {Side::kPrimal, Side::kDual}) {
    std::map<Vector, std::vector<Vector>> slices;
    for (const auto& [x, y] : m.pairs()) {
      if (side == Side::kPrimal) {
        slices[x].push_back(y);
      } else {
        slices[y].push_back(x);
      }
    }
    for (auto& [at, members] : slices) {
      if (m.HintAt(side, at) != nullptr) continue;
      members = SortedUnique(std::move(members));
      if (auto mid = MidpointClosureFailure(members, tol)) {
        return {false, FailingSlice{side, at, *mid}};
      }
    }
  }
  return {};
}

double ChainWeight(const LawGraph& m, int i, int j) {
  const auto& pi = m.pairs().at(i);
  const auto& pj = m.pairs().at(j);
  return Inner(pj.first - pi.first, pi.second);
}

double CycleSum(const LawGraph& m, std::span<const int> cycle) {
  double total = 0.0;
  for (size_t t = 0; t < cycle.size(); ++t) {
    total += ChainWeight(m, cycle[t], cycle[(t + 1) % cycle.size()]);
  }
  return total;
}

CycleReport CyclicMonotonicityCheck(const LawGraph& m, double tol) {
  if (!(tol > 0.0)) {
    throw PreconditionError("CyclicMonotonicityCheck: tol must be > 0");
  }
  const int n = int(m.size());
  if (n < 2) return {};
  const Matrix w = WeightMatrix(m);
  // With cost -w + tol/n every simple cycle whose sum exceeds tol is
  // negative. A cycle found there may still sum to at most tol; in that
  // case retry with cost -w + tol, whose negative cycles all exceed tol.
  for (double shift : {tol / n, tol}) {
    auto cycle = FindNegativeCycle(ShiftedNegation(w, shift));
    if (!cycle) return {};
    std::vector<int> witness = RotateToSmallest(std::move(*cycle));
    const double total = CycleSum(m, witness);
    if (total > tol) return {false, std::move(witness), total};
  }
  return {};
}

NotCyclicallyMonotone::NotCyclicallyMonotone(CycleReport report)
    : PreconditionError("samples are not cyclically monotone (cycle sum " +
                        std::to_string(report.cycle_sum) + ")"),
      report_(std::move(report)) {}

std::vector<double> LongestChainSums(const LawGraph& m, int base) {
  const int n = int(m.size());
  if (base < 0 || base >= n) {
    throw PreconditionError("LongestChainSums: base index out of range");
  }
  const Matrix w = WeightMatrix(m);
  const double kUnreached = -std::numeric_limits<double>::infinity();
  std::vector<double> c(n, kUnreached);
  c[base] = 0.0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      if (c[u] == kUnreached) continue;
      for (int v = 0; v < n; ++v) {
        if (v == u || v == base) continue;
        const double cand = c[u] + w[u][v];
        if (cand > c[v]) {
          c[v] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return c;
}

ConvexFunction RockafellarReconstruct(const LawGraph& m, int base, double tol) {
  if (base < 0 || base >= int(m.size())) {
    throw PreconditionError("RockafellarReconstruct: base index out of range");
  }
  CycleReport report = CyclicMonotonicityCheck(m, tol);
  if (!report.cyclically_monotone) throw NotCyclicallyMonotone(std::move(report));
  const std::vector<double> c = LongestChainSums(m, base);
  std::vector<form::Affine> pieces;
  pieces.reserve(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    const auto& [x, y] = m.pairs()[i];
    pieces.push_back({y, c[i] - Inner(x, y)});
  }
  return ConvexFunction::MaxAffine(std::move(pieces));
}

}  // namespace bipotkit
