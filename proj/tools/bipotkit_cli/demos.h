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

#ifndef BIPOTKIT_CLI_DEMOS_H_
#define BIPOTKIT_CLI_DEMOS_H_

#include <optional>
#include <string>
#include <vector>

#include "bipotkit/bipotential.h"
#include "bipotkit/cover.h"
#include "bipotkit/law_graph.h"
#include "bipotkit_cli/io.h"

namespace bipotkit::cli {

// Everything one demo pipeline produces: cover, coverage check, BIC check,
// both infima, axiom check on the analytic one, and its sampled graph.
struct DemoRun {
  std::string name;
  Cover cover;
  LawGraph law;
  std::vector<Vector> x_grid;
  std::vector<Vector> y_grid;
  CoverageReport coverage;
  BicReport bic;
  AxiomReport axioms;
  Bipotential b_analytic;
  Bipotential b_grid;
  LawGraph graph;
  // Reference closed form and the largest deviations from it on the grids.
  std::string reference;
  double max_error_analytic = 0.0;
  double max_error_grid = 0.0;

  bool ok() const { return coverage.covered && bic.is_bic && axioms.ok(); }
};

inline const std::vector<double> kProbeAlphas = {0.0, 0.25, 0.5, 1.0};

// Probe parameters for the BIC check: the whole sample grid when it is
// small, else those of {0.5, 1, 2, 4} inside the domain.
std::vector<Parameter> ProbeLambdas(const Cover& c);

std::vector<std::string> DemoNames();

// nullopt for an unknown name. `nodes` are the per-coordinate probe nodes
// of the 2-D grid; the BIC plan uses every other node.
std::optional<DemoRun> RunDemo(const std::string& name,
                               const std::vector<double>& nodes, double tol);

Json DemoReport(const DemoRun& run);
// Human-readable summary; the last line is the reference comparison.
std::string DemoTranscript(const DemoRun& run);

}  // namespace bipotkit::cli

#endif  // BIPOTKIT_CLI_DEMOS_H_
