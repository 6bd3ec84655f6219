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

#include "bipotkit_cli/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bipotkit::cli {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

double ParseReal(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": number is not finite");
  return v;
}

// A number or the string "inf".
ExtendedValue ParseExtended(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtendedValue::Infinity();
    throw ParseError(where + ": expected a number or \"inf\"");
  }
  return ParseReal(j, where);
}

double Snap(double v, double s) {
  if (s <= 0.0) return v;
  return std::round(v / s) * s + 0.0;
}

Vector ParseVector(const Json& j, int dim, const std::string& where, double snap = 0.0) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of numbers");
  if (int(j.size()) != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(j.size()));
  }
  std::vector<double> coords;
  for (size_t i = 0; i < j.size(); ++i) {
    coords.push_back(Snap(ParseReal(j[i], where), snap));
  }
  return Vector(std::span<const double>(coords));
}

std::vector<Vector> ParseVectors(const Json& j, int dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of vectors");
  std::vector<Vector> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(ParseVector(j[i], dim, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string ParseString(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

form::Affine ParseAffine(const Json& j, int dim, const std::string& where) {
  return {ParseVector(Field(j, "slope", where), dim, where + ".slope"),
          ParseReal(Field(j, "offset", where), where + ".offset")};
}

Json AffineJson(const form::Affine& a) {
  return Json{{"slope", ToJson(a.slope)}, {"offset", a.offset}};
}

SliceHint ParseHint(const Json& j, int dim, double snap, const std::string& where) {
  Side side = Side::kPrimal;
  if (j.contains("side")) {
    const std::string s = ParseString(j.at("side"), where + ".side");
    if (s == "dual") {
      side = Side::kDual;
    } else if (s != "primal") {
      throw ParseError(where + ".side: expected \"primal\" or \"dual\"");
    }
  }
  const Vector at = ParseVector(Field(j, "at", where), dim, where + ".at", snap);
  const std::string kind = ParseString(Field(j, "shape", where), where + ".shape");
  const Json& p = Field(j, "params", where);
  const std::string pw = where + ".params";
  auto vec = [&](const char* key) {
    return ParseVector(Field(p, key, pw), dim, pw + "." + key);
  };
  if (kind == "segment") return {side, at, shape::Segment{vec("from"), vec("to")}};
  if (kind == "singleton") return {side, at, shape::Singleton{vec("point")}};
  if (kind == "ray") return {side, at, shape::Ray{vec("origin"), vec("direction")}};
  if (kind == "ball") {
    const ExtendedValue r = ParseExtended(Field(p, "radius", pw), pw + ".radius");
    if (r < 0.0) throw ParseError(pw + ".radius: negative");
    return {side, at, shape::Ball{vec("center"), r}};
  }
  throw ParseError(where + ".shape: unknown shape \"" + kind + "\"");
}

Json HintJson(const SliceHint& h) {
  Json j;
  j["at"] = ToJson(h.at);
  j["side"] = h.side == Side::kPrimal ? "primal" : "dual";
  std::visit(Overloaded{
                 [&](const shape::Segment& s) {
                   j["shape"] = "segment";
                   j["params"] = Json{{"from", ToJson(s.from)}, {"to", ToJson(s.to)}};
                 },
                 [&](const shape::Singleton& s) {
                   j["shape"] = "singleton";
                   j["params"] = Json{{"point", ToJson(s.point)}};
                 },
                 [&](const shape::Ray& s) {
                   j["shape"] = "ray";
                   j["params"] = Json{{"origin", ToJson(s.origin)},
                                      {"direction", ToJson(s.direction)}};
                 },
                 [&](const shape::Ball& s) {
                   j["shape"] = "ball";
                   j["params"] = Json{{"center", ToJson(s.center)}, {"radius", ToJson(s.radius)}};
                 },
             },
             h.shape);
  return j;
}

int ParseDimension(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  const int n = j.get<int>();
  if (n < 1 || n > Vector::kMaxDimension) {
    throw ParseError(where + ": dimension must be 1, 2 or 3");
  }
  return n;
}

ParameterDomain ParseDomain(const Json& j, std::optional<int> grid_points) {
  const std::string w = "lambda_domain";
  const double lo = j.contains("lo") ? ParseReal(j.at("lo"), w + ".lo") : 0.0;
  const ExtendedValue hi =
      j.contains("hi") ? ParseExtended(j.at("hi"), w + ".hi") : ExtendedValue::Infinity();
  bool includes_infinity = hi.is_infinite();
  if (j.contains("includes_infinity")) {
    if (!j.at("includes_infinity").is_boolean()) {
      throw ParseError(w + ".includes_infinity: expected a boolean");
    }
    includes_infinity = j.at("includes_infinity").get<bool>();
  }
  LogGridSpec spec;
  if (j.contains("grid_points")) {
    if (!j.at("grid_points").is_number_integer()) {
      throw ParseError(w + ".grid_points: expected an integer");
    }
    spec.points = j.at("grid_points").get<int>();
  }
  if (grid_points) spec.points = *grid_points;
  if (spec.points < 2) throw ParseError(w + ".grid_points: must be >= 2");
  if (j.contains("log_min")) spec.min = ParseReal(j.at("log_min"), w + ".log_min");
  if (j.contains("log_max")) spec.max = ParseReal(j.at("log_max"), w + ".log_max");
  if (lo < 0.0) throw ParseError(w + ".lo: must be >= 0");
  try {
    return ParameterDomain::MakeInterval(lo, hi, includes_infinity, spec);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(w) + ": " + e.what());
  }
}

}  // namespace

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

Json ToJson(const Vector& v) {
  Json j = Json::array();
  for (double c : v.coords()) j.push_back(c);
  return j;
}

Json ToJson(ExtendedValue v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json ToJson(const ConvexFunction& phi) {
  return std::visit(
      Overloaded{
          [](const form::Quadratic& f) { return Json{{"form", "quadratic"}, {"scale", f.scale}}; },
          [](const form::ScaledNorm& f) {
            return Json{{"form", "scaled_norm"}, {"scale", f.scale}};
          },
          [](const form::IndicatorBall& f) {
            return Json{{"form", "indicator_ball"}, {"radius", ToJson(f.radius)}};
          },
          [](const form::IndicatorPoint& f) {
            return Json{{"form", "indicator_point"}, {"point", ToJson(f.point)},
                        {"level", f.level}};
          },
          [](const form::Affine& f) {
            Json j = AffineJson(f);
            j["form"] = "affine";
            return j;
          },
          [](const form::MaxAffine& f) {
            Json pieces = Json::array();
            for (const auto& p : f.pieces) pieces.push_back(AffineJson(p));
            return Json{{"form", "max_affine"}, {"pieces", pieces}};
          },
          [](const form::Sampled& f) {
            Json grid = Json::array();
            Json values = Json::array();
            for (const auto& g : f.grid) grid.push_back(ToJson(g));
            for (auto v : f.values) values.push_back(ToJson(v));
            return Json{{"form", "sampled"}, {"grid", grid}, {"values", values}};
          },
      },
      phi.form());
}

ConvexFunction ParseConvexFunction(const Json& j, int dim) {
  const std::string w = "function";
  const std::string kind = ParseString(Field(j, "form", w), w + ".form");
  try {
    if (kind == "quadratic") {
      return ConvexFunction::Quadratic(dim, ParseReal(Field(j, "scale", w), w + ".scale"));
    }
    if (kind == "scaled_norm") {
      return ConvexFunction::ScaledNorm(dim, ParseReal(Field(j, "scale", w), w + ".scale"));
    }
    if (kind == "indicator_ball") {
      return ConvexFunction::IndicatorBall(
          dim, ParseExtended(Field(j, "radius", w), w + ".radius"));
    }
    if (kind == "indicator_point") {
      const double level = j.contains("level") ? ParseReal(j.at("level"), w + ".level") : 0.0;
      return ConvexFunction::IndicatorPoint(
          ParseVector(Field(j, "point", w), dim, w + ".point"), level);
    }
    if (kind == "affine") {
      const form::Affine a = ParseAffine(j, dim, w);
      return ConvexFunction::Affine(a.slope, a.offset);
    }
    if (kind == "max_affine") {
      const Json& pieces = Field(j, "pieces", w);
      if (!pieces.is_array()) throw ParseError(w + ".pieces: expected an array");
      std::vector<form::Affine> out;
      for (size_t i = 0; i < pieces.size(); ++i) {
        out.push_back(ParseAffine(pieces[i], dim, w + ".pieces[" + std::to_string(i) + "]"));
      }
      return ConvexFunction::MaxAffine(std::move(out));
    }
    if (kind == "sampled") {
      std::vector<Vector> grid = ParseVectors(Field(j, "grid", w), dim, w + ".grid");
      const Json& values = Field(j, "values", w);
      if (!values.is_array()) throw ParseError(w + ".values: expected an array");
      std::vector<ExtendedValue> vals;
      for (size_t i = 0; i < values.size(); ++i) {
        vals.push_back(ParseExtended(values[i], w + ".values[" + std::to_string(i) + "]"));
      }
      return ConvexFunction::Sampled(std::move(grid), std::move(vals));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(w + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(w + ": " + e.what());
  }
  throw ParseError(w + ".form: unknown form \"" + kind + "\"");
}

LawGraphDocument ParseLawGraph(const Json& j) {
  LawGraphDocument doc;
  doc.dimension = ParseDimension(Field(j, "dimension", "law"), "law.dimension");
  if (j.contains("snap_tolerance")) {
    doc.snap_tolerance = ParseReal(j.at("snap_tolerance"), "law.snap_tolerance");
    if (doc.snap_tolerance < 0.0) throw ParseError("law.snap_tolerance: must be >= 0");
  }
  const Json& pairs = Field(j, "pairs", "law");
  if (!pairs.is_array() || pairs.empty()) {
    throw ParseError("law.pairs: expected a nonempty array");
  }
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string w = "law.pairs[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2) {
      throw ParseError(w + ": expected [[x...], [y...]]");
    }
    doc.pairs.emplace_back(ParseVector(pairs[i][0], doc.dimension, w, doc.snap_tolerance),
                           ParseVector(pairs[i][1], doc.dimension, w, doc.snap_tolerance));
  }
  if (j.contains("slice_hints")) {
    const Json& hints = j.at("slice_hints");
    if (!hints.is_array()) throw ParseError("law.slice_hints: expected an array");
    for (size_t i = 0; i < hints.size(); ++i) {
      doc.hints.push_back(ParseHint(hints[i], doc.dimension, doc.snap_tolerance,
                                    "law.slice_hints[" + std::to_string(i) + "]"));
    }
  }
  // Validate eagerly so callers see a parse error, not a library one.
  try {
    (void)doc.ToLawGraph();
  } catch (const Error& e) {
    throw ParseError(std::string("law: ") + e.what());
  }
  return doc;
}

Json ToJson(const LawGraphDocument& doc) {
  Json j;
  j["dimension"] = doc.dimension;
  Json pairs = Json::array();
  for (const auto& [x, y] : doc.pairs) pairs.push_back(Json::array({ToJson(x), ToJson(y)}));
  j["pairs"] = pairs;
  if (!doc.hints.empty()) {
    Json hints = Json::array();
    for (const auto& h : doc.hints) hints.push_back(HintJson(h));
    j["slice_hints"] = hints;
  }
  if (doc.snap_tolerance > 0.0) j["snap_tolerance"] = doc.snap_tolerance;
  return j;
}

Cover ParseCover(const Json& j, std::optional<int> grid_points) {
  const std::string family = ParseString(Field(j, "family", "cover"), "cover.family");
  if (family == "quadratic" || family == "norm") {
    const int dim = j.contains("dimension") ? ParseDimension(j.at("dimension"), "cover.dimension")
                                            : 1;
    const ParameterDomain d =
        ParseDomain(j.contains("lambda_domain") ? j.at("lambda_domain") : Json::object(),
                    grid_points);
    return family == "quadratic" ? Cover::Quadratic(dim, d) : Cover::Norm(dim, d);
  }
  if (family != "separable" && family != "tabulated") {
    throw ParseError("cover.family: unknown family \"" + family + "\"");
  }
  if (j.contains("lambda_domain")) {
    const Json& d = j.at("lambda_domain");
    if (d.contains("grid_points") &&
        (!d.at("grid_points").is_number_integer() || d.at("grid_points").get<int>() < 2)) {
      throw ParseError("lambda_domain.grid_points: must be an integer >= 2");
    }
    if (d.contains("lo") && ParseReal(d.at("lo"), "lambda_domain.lo") < 0.0) {
      throw ParseError("lambda_domain.lo: must be >= 0");
    }
  }
  const int dim = j.contains("dimension") ? ParseDimension(j.at("dimension"), "cover.dimension")
                                          : -1;
  auto infer_dim = [&](const Json& f) {
    if (dim > 0) return dim;
    // Take the dimension from the first vector-valued field.
    for (const char* key : {"point", "slope"}) {
      if (f.contains(key) && f.at(key).is_array()) return int(f.at(key).size());
    }
    if (f.contains("pieces") && f.at("pieces").is_array() && !f.at("pieces").empty()) {
      const Json& s = f.at("pieces")[0];
      if (s.contains("slope") && s.at("slope").is_array()) return int(s.at("slope").size());
    }
    if (f.contains("grid") && f.at("grid").is_array() && !f.at("grid").empty() &&
        f.at("grid")[0].is_array()) {
      return int(f.at("grid")[0].size());
    }
    return 1;
  };
  if (family == "separable") {
    const Json& phi = Field(j, "phi", "cover");
    return Cover::Separable(ParseConvexFunction(phi, infer_dim(phi)));
  }

  const Json& members = Field(j, "members", "cover");
  if (!members.is_array() || members.empty()) {
    throw ParseError("cover.members: expected a nonempty array");
  }
  const int n = infer_dim(Field(members[0], "potential", "cover.members[0]"));
  std::vector<Vector> dual_grid;
  if (j.contains("dual_grid")) dual_grid = ParseVectors(j.at("dual_grid"), n, "cover.dual_grid");
  std::vector<family::Tabulated::Member> out;
  for (size_t i = 0; i < members.size(); ++i) {
    const std::string w = "cover.members[" + std::to_string(i) + "]";
    const ExtendedValue lambda = ParseExtended(Field(members[i], "lambda", w), w + ".lambda");
    if (lambda < 0.0) throw ParseError(w + ".lambda: must be >= 0");
    ConvexFunction potential = ParseConvexFunction(Field(members[i], "potential", w), n);
    std::optional<ConvexFunction> conjugate;
    if (members[i].contains("conjugate")) {
      conjugate = ParseConvexFunction(members[i].at("conjugate"), n);
    } else {
      try {
        conjugate = Conjugate(potential, dual_grid);
      } catch (const PreconditionError& e) {
        throw ParseError(w + ": cannot compute the conjugate: " + e.what());
      }
    }
    out.push_back({lambda, std::move(potential), std::move(*conjugate)});
  }
  try {
    return Cover::Tabulated(std::move(out));
  } catch (const Error& e) {
    throw ParseError(std::string("cover: ") + e.what());
  }
}

Json ToJson(const BBReport& r) {
  Json j{{"is_bb_graph", r.is_bb_graph}};
  if (r.failing_slice) {
    j["failing_slice"] = Json{
        {"which", r.failing_slice->which == Side::kPrimal ? "primal" : "dual"},
        {"at", ToJson(r.failing_slice->at)},
        {"witness_midpoint", ToJson(r.failing_slice->witness_midpoint)}};
  } else {
    j["failing_slice"] = nullptr;
  }
  return j;
}

Json ToJson(const CycleReport& r) {
  Json j{{"cyclically_monotone", r.cyclically_monotone}};
  j["witness_cycle"] = r.witness_cycle ? Json(*r.witness_cycle) : Json(nullptr);
  j["cycle_sum"] = r.cycle_sum;
  return j;
}

Json ToJson(const CoverageReport& r) {
  Json missed = Json::array();
  for (const auto& [x, y] : r.missed_pairs) missed.push_back(Json::array({ToJson(x), ToJson(y)}));
  Json spurious = Json::array();
  for (const auto& [l, x, y] : r.spurious_pairs) {
    spurious.push_back(Json{{"lambda", ToJson(l)}, {"x", ToJson(x)}, {"y", ToJson(y)}});
  }
  return Json{{"covered", r.covered},
              {"missed_pairs", missed},
              {"spurious_pairs", spurious},
              {"lsc", r.lsc_assumed ? "assumed" : "structural"}};
}

Json ToJson(const AxiomReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back(Json{{"axiom", AxiomName(c.axiom)},
                       {"x", ToJson(c.x)},
                       {"y", ToJson(c.y)},
                       {"violation", std::isinf(c.violation) ? Json("inf") : Json(c.violation)}});
  }
  return Json{{"lower_bound_ok", r.lower_bound_ok},
              {"separate_convexity_ok", r.separate_convexity_ok},
              {"graph_equivalence_ok", r.graph_equivalence_ok},
              {"no_contact_x", r.no_contact_x},
              {"no_contact_y", r.no_contact_y},
              {"lsc_basis", r.lsc_basis},
              {"counterexamples", ces}};
}

Json ToJson(const BicReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back(Json{{"side", c.side == Side::kPrimal ? "primal" : "dual"},
                       {"lambda1", ToJson(c.lambda1)},
                       {"z1", ToJson(c.z1)},
                       {"lambda2", ToJson(c.lambda2)},
                       {"z2", ToJson(c.z2)},
                       {"alpha", c.alpha},
                       {"fixed", ToJson(c.fixed)},
                       {"deficit", std::isinf(c.deficit) ? Json("inf") : Json(c.deficit)}});
  }
  return Json{{"is_bic", r.is_bic}, {"counterexamples", ces}};
}

namespace {

void WriteHeader(std::ostream& os, int n, bool values) {
  for (int i = 1; i <= n; ++i) os << 'x' << i << ',';
  for (int i = 1; i <= n; ++i) os << 'y' << i << (i < n || values ? "," : "");
  if (values) os << "b,pairing";
  os << '\n';
}

void WriteCoords(std::ostream& os, const Vector& v) {
  for (double c : v.coords()) os << FormatNumber(c) << ',';
}

}  // namespace

void WriteBipotentialCsv(std::ostream& os, const Bipotential& b,
                         std::span<const Vector> x_grid,
                         std::span<const Vector> y_grid) {
  WriteHeader(os, b.dim(), true);
  for (const auto& x : x_grid) {
    for (const auto& y : y_grid) {
      WriteCoords(os, x);
      WriteCoords(os, y);
      os << FormatNumber(b(x, y).ToDouble()) << ',' << FormatNumber(Inner(x, y)) << '\n';
    }
  }
}

void WritePairsCsv(std::ostream& os, const LawGraph& m) {
  WriteHeader(os, m.dim(), false);
  for (const auto& [x, y] : m.pairs()) {
    std::ostringstream row;
    WriteCoords(row, x);
    WriteCoords(row, y);
    std::string s = row.str();
    s.pop_back();
    os << s << '\n';
  }
}

}  // namespace bipotkit::cli
