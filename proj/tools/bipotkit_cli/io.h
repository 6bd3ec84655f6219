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

#ifndef BIPOTKIT_CLI_IO_H_
#define BIPOTKIT_CLI_IO_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bipotkit/bipotential.h"
#include "bipotkit/convex_function.h"
#include "bipotkit/cover.h"
#include "bipotkit/error.h"
#include "bipotkit/law_graph.h"
#include "json.hpp"

namespace bipotkit::cli {

using Json = nlohmann::ordered_json;

// Malformed or schema-violating input.
class ParseError : public Error {
 public:
  using Error::Error;
};

Json ReadJsonFile(const std::string& path);

// 12 significant digits, "inf" for +inf.
std::string FormatNumber(double v);

Json ToJson(const Vector& v);
Json ToJson(ExtendedValue v);
Json ToJson(const ConvexFunction& phi);

// Law graph file:
//   {"dimension": n, "pairs": [[[x...], [y...]], ...],
//    "slice_hints": [{"at": [...], "side": "primal"|"dual",
//                     "shape": "segment"|"ball"|"singleton"|"ray",
//                     "params": {...}}],
//    "snap_tolerance": s}
// Shape params: segment {"from", "to"}, ball {"center", "radius"},
// singleton {"point"}, ray {"origin", "direction"}.
struct LawGraphDocument {
  int dimension = 1;
  std::vector<LawGraph::Pair> pairs;
  std::vector<SliceHint> hints;
  double snap_tolerance = 0.0;

  LawGraph ToLawGraph() const { return LawGraph(pairs, hints); }
};

// Coordinates of pairs and hint anchors are rounded to multiples of
// snap_tolerance when it is positive.
LawGraphDocument ParseLawGraph(const Json& j);
Json ToJson(const LawGraphDocument& doc);

// Cover file:
//   {"family": "quadratic"|"norm"|"separable"|"tabulated",
//    "dimension": n,  (quadratic and norm; default 1)
//    "lambda_domain": {"lo", "hi", "includes_infinity", "grid_points",
//                      "log_min", "log_max"},  (quadratic and norm)
//    "phi": function,  (separable)
//    "members": [{"lambda", "potential", "conjugate"}],  (tabulated)
//    "dual_grid": [[y...], ...]}  (optional, for sampled conjugates)
// A tabulated member without "conjugate" gets the computed one.
// `grid_points` overrides the file's log grid density.
Cover ParseCover(const Json& j, std::optional<int> grid_points = std::nullopt);
ConvexFunction ParseConvexFunction(const Json& j, int dim);

Json ToJson(const BBReport& r);
Json ToJson(const CycleReport& r);
Json ToJson(const CoverageReport& r);
Json ToJson(const AxiomReport& r);
Json ToJson(const BicReport& r);

// Header x1..xn,y1..yn,b,pairing; one row per (x, y), x slowest.
void WriteBipotentialCsv(std::ostream& os, const Bipotential& b,
                         std::span<const Vector> x_grid,
                         std::span<const Vector> y_grid);
// Header x1..xn,y1..yn.
void WritePairsCsv(std::ostream& os, const LawGraph& m);

}  // namespace bipotkit::cli

#endif  // BIPOTKIT_CLI_IO_H_
