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

#ifndef BIPOTKIT_SRC_MAX_AFFINE_LP_H_
#define BIPOTKIT_SRC_MAX_AFFINE_LP_H_

#include <span>

#include "bipotkit/convex_function.h"

namespace bipotkit::internal {

// Conjugate of x -> max_i <a_i, x> + b_i at y:
//   min sum_i mu_i (-b_i)  s.t.  sum_i mu_i a_i = y,  mu in the simplex,
// +inf when y is outside the convex hull of the slopes.
ExtendedValue MaxAffineConjugate(std::span<const form::Affine> pieces,
                                 const Vector& y);

}  // namespace bipotkit::internal

#endif  // BIPOTKIT_SRC_MAX_AFFINE_LP_H_
