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

#include "bipotkit_cli/commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "bipotkit_cli/demos.h"
#include "bipotkit_cli/io.h"

namespace bipotkit::cli {
namespace {

// Reports print with 12 significant digits; non-finite values as strings.
void RoundNumbers(Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) {
      j = std::strtod(FormatNumber(v).c_str(), nullptr);
    } else {
      j = FormatNumber(v);
    }
  } else if (j.is_structured()) {
    for (auto& child : j) RoundNumbers(child);
  }
}

void PrintReport(std::ostream& out, Json j) {
  RoundNumbers(j);
  out << j.dump(2) << '\n';
}

double ParseNumberToken(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("--probe-grid: bad number \"" + s + "\"");
  }
  return v;
}

// "N" for N nodes on [-2, 2], or "lo:hi:N".
std::vector<double> ParseProbeNodes(const std::string& spec) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 1 && parts.size() != 3) {
    throw ParseError("--probe-grid: expected N or lo:hi:N, got \"" + spec + "\"");
  }
  const double lo = parts.size() == 3 ? ParseNumberToken(parts[0]) : -2.0;
  const double hi = parts.size() == 3 ? ParseNumberToken(parts[1]) : 2.0;
  const double n = ParseNumberToken(parts.back());
  if (n < 2 || n != std::floor(n) || n > 100000) {
    throw ParseError("--probe-grid: node count must be an integer >= 2");
  }
  if (!(lo < hi)) throw ParseError("--probe-grid: need lo < hi");
  return Linspace(lo, hi, int(n));
}

InfMode ResolveMode(const std::string& mode, const Cover& c) {
  if (mode == "grid") return InfMode::kGrid;
  if (mode == "analytic") return InfMode::kAnalytic;
  return c.Is<family::Tabulated>() ? InfMode::kGrid : InfMode::kAnalytic;
}

const char* ModeName(InfMode m) { return m == InfMode::kGrid ? "grid" : "analytic"; }

bool AnalyticUnsupported(const std::string& mode, const Cover& c, std::ostream& err) {
  if (mode == "analytic" && c.Is<family::Tabulated>()) {
    err << "error: analytic mode has no closed form for a tabulated cover; use --mode grid\n";
    return true;
  }
  return false;
}

int CheckLaw(const std::string& path, double tol, std::ostream& out) {
  const LawGraph m = ParseLawGraph(ReadJsonFile(path)).ToLawGraph();
  const BBReport bb = BBCheck(m, tol);
  const CycleReport cycles = CyclicMonotonicityCheck(m, tol);
  PrintReport(out, Json{{"bb_check", ToJson(bb)}, {"cycle_check", ToJson(cycles)}});
  return bb.is_bb_graph ? kExitOk : kExitCheckFailed;
}

int Reconstruct(const std::string& path, int base, double tol, std::ostream& out,
                std::ostream& err) {
  const LawGraph m = ParseLawGraph(ReadJsonFile(path)).ToLawGraph();
  if (base < 0 || base >= int(m.size())) {
    throw ParseError("--base: no pair with index " + std::to_string(base));
  }
  const CycleReport cycles = CyclicMonotonicityCheck(m, tol);
  if (!cycles.cyclically_monotone) {
    err << "error: the law is not cyclically monotone\n";
    PrintReport(out, Json{{"cycle_check", ToJson(cycles)}});
    return kExitCheckFailed;
  }
  const ConvexFunction phi = RockafellarReconstruct(m, base, tol);
  std::vector<form::Affine> pieces = phi.As<form::MaxAffine>()->pieces;
  std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.offset < b.offset;
  });
  Json jp = Json::array();
  for (const auto& p : pieces) jp.push_back(Json{{"slope", ToJson(p.slope)}, {"offset", p.offset}});
  PrintReport(out, Json{{"base", base},
                        {"chain_sums", LongestChainSums(m, base)},
                        {"pieces", jp}});
  return kExitOk;
}

int Build(const std::string& path, const std::string& mode, const std::string& probe,
          std::optional<int> lambda_grid, std::ostream& out, std::ostream& err) {
  const Cover cover = ParseCover(ReadJsonFile(path), lambda_grid);
  if (AnalyticUnsupported(mode, cover, err)) return kExitUnsupported;
  const std::vector<Vector> grid = ProductGrid(ParseProbeNodes(probe), cover.dim());
  const Bipotential b = BuildInf(cover, ResolveMode(mode, cover));
  WriteBipotentialCsv(out, b, grid, grid);
  return kExitOk;
}

struct VerifyOptions {
  std::string cover_path;
  std::string law_path;
  std::string demo;
  std::string mode = "auto";
  double tol = 1e-3;
  std::string probe;
  std::optional<int> lambda_grid;
};

int VerifyCover(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const Cover cover = ParseCover(ReadJsonFile(o.cover_path), o.lambda_grid);
  if (AnalyticUnsupported(o.mode, cover, err)) return kExitUnsupported;
  const InfMode mode = ResolveMode(o.mode, cover);
  const std::vector<Vector> grid =
      ProductGrid(ParseProbeNodes(o.probe.empty() ? "-2:2:5" : o.probe), cover.dim());
  const AxiomReport axioms = VerifyAxioms(BuildInf(cover, mode), grid, grid, o.tol);
  const BicReport bic = BicCheck(cover, {ProbeLambdas(cover), kProbeAlphas, grid, grid}, o.tol);
  const bool ok = axioms.ok() && bic.is_bic;
  PrintReport(out, Json{{"mode", ModeName(mode)},
                        {"axioms", ToJson(axioms)},
                        {"bic", ToJson(bic)},
                        {"ok", ok}});
  return ok ? kExitOk : kExitCheckFailed;
}

int VerifyLaw(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const LawGraph m = ParseLawGraph(ReadJsonFile(o.law_path)).ToLawGraph();
  try {
    const Bipotential b = BuildBInfinity(m, o.tol);
    const AxiomReport axioms = VerifyAxioms(b, Domain(m), Image(m), o.tol);
    PrintReport(out, Json{{"bb_check", ToJson(BBCheck(m, o.tol))},
                          {"axioms", ToJson(axioms)},
                          {"ok", axioms.ok()}});
    return axioms.ok() ? kExitOk : kExitCheckFailed;
  } catch (const NotBBGraph& e) {
    err << "error: the law is not a BB-graph\n";
    PrintReport(out, Json{{"bb_check", ToJson(e.report())}, {"ok", false}});
    return kExitCheckFailed;
  }
}

int VerifyDemo(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const auto run = RunDemo(o.demo, ParseProbeNodes(o.probe.empty() ? "-2:2:9" : o.probe), o.tol);
  if (!run) {
    err << "error: unknown demo \"" << o.demo << "\"\n";
    return kExitUsage;
  }
  PrintReport(out, DemoReport(*run));
  return run->ok() ? kExitOk : kExitCheckFailed;
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << contents;
}

int Demo(const std::string& name, const std::string& out_dir, const std::string& probe,
         double tol, std::ostream& out, std::ostream& err) {
  const auto run = RunDemo(name, ParseProbeNodes(probe), tol);
  if (!run) {
    err << "error: unknown demo \"" << name << "\"; known demos:";
    for (const auto& n : DemoNames()) err << ' ' << n;
    err << '\n';
    return kExitUsage;
  }
  const std::filesystem::path dir = out_dir.empty() ? "bipotkit-" + name : out_dir;
  std::filesystem::create_directories(dir);
  std::ostringstream csv;
  WriteBipotentialCsv(csv, run->b_grid, run->x_grid, run->y_grid);
  WriteFile(dir / "b_grid.csv", csv.str());
  csv.str("");
  WriteBipotentialCsv(csv, run->b_analytic, run->x_grid, run->y_grid);
  WriteFile(dir / "b_analytic.csv", csv.str());
  csv.str("");
  WritePairsCsv(csv, run->graph);
  WriteFile(dir / "graph.csv", csv.str());
  Json report = DemoReport(*run);
  RoundNumbers(report);
  WriteFile(dir / "report.json", report.dump(2) + "\n");
  out << DemoTranscript(*run);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipotentials, law graphs and Lagrangian covers", "bipotkit"};
  app.require_subcommand(1);

  std::string check_path;
  double check_tol = 1e-9;
  auto* check = app.add_subcommand("check-law", "BB-graph and cyclic monotonicity checks");
  check->add_option("file", check_path, "law graph JSON")->required();
  check->add_option("--tol", check_tol, "check tolerance")->capture_default_str();

  std::string rec_path;
  int rec_base = 0;
  double rec_tol = 1e-9;
  auto* rec = app.add_subcommand("reconstruct", "max-affine potential of a monotone law");
  rec->add_option("file", rec_path, "law graph JSON")->required();
  rec->add_option("--base", rec_base, "pair index where the potential is 0")
      ->capture_default_str();
  rec->add_option("--tol", rec_tol, "cycle tolerance")->capture_default_str();

  const auto modes = CLI::IsMember({"analytic", "grid", "auto"});
  std::string build_path;
  std::string build_mode = "auto";
  std::string build_probe = "-2:2:41";
  std::optional<int> build_lambda_grid;
  auto* build = app.add_subcommand("build", "tabulate b = inf over a cover as CSV");
  build->add_option("cover", build_path, "cover JSON")->required();
  build->add_option("--mode", build_mode, "infimum: analytic, grid or auto")
      ->check(modes)
      ->capture_default_str();
  build->add_option("--probe-grid", build_probe, "nodes per coordinate: N or lo:hi:N")
      ->capture_default_str();
  build->add_option("--lambda-grid", build_lambda_grid, "log grid points for lambda")
      ->check(CLI::Range(2, 1 << 20));

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "bipotential axioms and BIC check");
  auto* vc = verify->add_option("--cover", vo.cover_path, "cover JSON");
  auto* vl = verify->add_option("--law", vo.law_path, "law graph JSON (checks b_inf)");
  auto* vd = verify->add_option("--demo", vo.demo, "built-in demo name");
  vc->excludes(vl, vd);
  vl->excludes(vd);
  verify->add_option("--mode", vo.mode, "infimum: analytic, grid or auto")
      ->check(modes)
      ->capture_default_str();
  verify->add_option("--tol", vo.tol, "check tolerance")->capture_default_str();
  verify->add_option("--probe-grid", vo.probe,
                     "nodes per coordinate: N or lo:hi:N (default -2:2:5, demos -2:2:9)");
  verify->add_option("--lambda-grid", vo.lambda_grid, "log grid points for lambda")
      ->check(CLI::Range(2, 1 << 20));

  std::string demo_name;
  std::string demo_out;
  std::string demo_probe = "-2:2:9";
  double demo_tol = 1e-3;
  auto* demo = app.add_subcommand("demo", "run a worked example and write CSV artifacts");
  demo->add_option("name", demo_name, "cauchy-quadratic, cauchy-norm, plasticity or separable")
      ->required();
  demo->add_option("--out-dir", demo_out, "artifact directory (default bipotkit-<name>)");
  demo->add_option("--probe-grid", demo_probe, "nodes per coordinate: N or lo:hi:N")
      ->capture_default_str();
  demo->add_option("--tol", demo_tol, "check tolerance")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return CheckLaw(check_path, check_tol, out);
    if (*rec) return Reconstruct(rec_path, rec_base, rec_tol, out, err);
    if (*build) return Build(build_path, build_mode, build_probe, build_lambda_grid, out, err);
    if (*verify) {
      if (!vo.cover_path.empty()) return VerifyCover(vo, out, err);
      if (!vo.law_path.empty()) return VerifyLaw(vo, out, err);
      if (!vo.demo.empty()) return VerifyDemo(vo, out, err);
      err << "error: verify needs one of --cover, --law or --demo\n";
      return kExitUsage;
    }
    if (*demo) return Demo(demo_name, demo_out, demo_probe, demo_tol, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bipotkit::cli
