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

#ifndef BIPOTKIT_DISCRETE_CONJUGATE_H_
#define BIPOTKIT_DISCRETE_CONJUGATE_H_

#include <span>
#include <vector>

#include "bipotkit/extended_value.h"
#include "bipotkit/vector.h"

namespace bipotkit {

// Discrete Legendre-Fenchel transform of samples (grid[i], values[i]):
//   out[j] = max_i <grid[i], dual_grid[j]> - values[i]
// over the finite samples. +inf samples are skipped; throws
// InvariantViolation if every sample is +inf.

// O(|grid| * |dual_grid|), any dimension.
std::vector<ExtendedValue> DiscreteConjugateBruteForce(
    std::span<const Vector> grid, std::span<const ExtendedValue> values,
    std::span<const Vector> dual_grid);

// O(|grid| + |dual_grid|) for 1-D grids that are both strictly increasing:
// lower convex hull of the samples, then a monotone merge with the dual
// grid. Returns the same doubles as the brute force.
std::vector<ExtendedValue> DiscreteConjugateLinear1D(
    std::span<const Vector> grid, std::span<const ExtendedValue> values,
    std::span<const Vector> dual_grid);

// True when `grid` is 1-D and strictly increasing.
bool IsIncreasing1D(std::span<const Vector> grid);

}  // namespace bipotkit

#endif  // BIPOTKIT_DISCRETE_CONJUGATE_H_
