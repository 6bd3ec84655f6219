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

#ifndef BIPOTKIT_LAW_GRAPH_H_
#define BIPOTKIT_LAW_GRAPH_H_

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bipotkit/convex_function.h"
#include "bipotkit/error.h"
#include "bipotkit/extended_value.h"
#include "bipotkit/vector.h"

namespace bipotkit {

enum class Side { kPrimal, kDual };

namespace shape {
struct Singleton {
  Vector point;
};
struct Segment {
  Vector from;
  Vector to;
};
struct Ball {
  Vector center;
  ExtendedValue radius;
};
// {origin + t * direction : t >= 0}
struct Ray {
  Vector origin;
  Vector direction;
};
}  // namespace shape

// Analytic description of a continuum slice: a primal hint at x describes
// m(x) subset of Y, a dual hint at y describes m*(y) subset of X. All shapes
// are closed and convex.
struct SliceHint {
  using Shape = std::variant<shape::Singleton, shape::Segment, shape::Ball, shape::Ray>;

  Side side = Side::kPrimal;
  Vector at;
  Shape shape;

  // Euclidean distance from p to the shape is <= tol.
  bool Contains(const Vector& p, double tol) const;
  int dim() const;
};

// A finite sample of a multivalued law M subset of X x Y, plus optional
// analytic slice descriptors.
class LawGraph {
 public:
  using Pair = std::pair<Vector, Vector>;

  // Throws PreconditionError if `pairs` is empty, a stored pair contradicts
  // a hint, or a hint is attached twice to the same point, and
  // DimensionMismatch on mixed dimensions.
  explicit LawGraph(std::vector<Pair> pairs, std::vector<SliceHint> hints = {});

  int dim() const { return dim_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<SliceHint>& hints() const { return hints_; }
  size_t size() const { return pairs_.size(); }

  const SliceHint* HintAt(Side side, const Vector& at) const;

  // (x, y) is a stored pair, or lies in a hinted slice within tol.
  bool Contains(const Vector& x, const Vector& y, double tol) const;

 private:
  int dim_;
  std::vector<Pair> pairs_;
  std::vector<SliceHint> hints_;
};

// m(x): every stored y paired with exactly x; sorted, without duplicates.
std::vector<Vector> Slice(const LawGraph& m, const Vector& x);
// m*(y): every stored x paired with exactly y.
std::vector<Vector> DualSlice(const LawGraph& m, const Vector& y);
// Distinct x values, sorted.
std::vector<Vector> Domain(const LawGraph& m);
// Distinct y values, sorted.
std::vector<Vector> Image(const LawGraph& m);

struct FailingSlice {
  Side which = Side::kPrimal;
  Vector at;
  Vector witness_midpoint;
};

struct BBReport {
  bool is_bb_graph = true;
  std::optional<FailingSlice> failing_slice;
};

// Bi-convex, bi-closed test. Hinted slices pass by construction; sampled
// slices must be midpoint-closed within tol. Finite slices are closed.
// Slices are visited in sorted order so the report does not depend on the
// order of the pairs.
BBReport BBCheck(const LawGraph& m, double tol);

struct CycleReport {
  bool cyclically_monotone = true;
  // Pair indices i0 -> i1 -> ... -> ik-1 -> i0, starting at the smallest.
  std::optional<std::vector<int>> witness_cycle;
  // sum_t <x_{i_{t+1}} - x_{i_t}, y_{i_t}> over the witness; 0 otherwise.
  double cycle_sum = 0.0;
};

// Weight of the edge i -> j of the complete digraph on pair indices,
// <x_j - x_i, y_i>.
double ChainWeight(const LawGraph& m, int i, int j);

// Sum of ChainWeight over the closed cycle.
double CycleSum(const LawGraph& m, std::span<const int> cycle);

// Positive-cycle detection by Bellman-Ford on negated weights. Cycle sums
// in (0, tol] count as zero.
CycleReport CyclicMonotonicityCheck(const LawGraph& m, double tol);

// Thrown by RockafellarReconstruct when the samples have a positive cycle.
class NotCyclicallyMonotone : public PreconditionError {
 public:
  explicit NotCyclicallyMonotone(CycleReport report);
  const CycleReport& report() const { return report_; }

 private:
  CycleReport report_;
};

// c_i = largest chain sum from `base` to i over ChainWeight (longest path,
// finite without positive cycles). c_base = 0.
std::vector<double> LongestChainSums(const LawGraph& m, int base);

// Max-affine potential x -> max_i c_i + <x - x_i, y_i>, one piece per pair
// in pair order, normalized so that its value at x_base is 0. Throws
// NotCyclicallyMonotone (with the witness) or PreconditionError.
ConvexFunction RockafellarReconstruct(const LawGraph& m, int base, double tol);

}  // namespace bipotkit

#endif  // BIPOTKIT_LAW_GRAPH_H_
