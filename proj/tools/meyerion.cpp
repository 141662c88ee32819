// Copyright 2026 The Meyerion Authors.
//
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

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "meyerion/arrangement.hpp"
#include "meyerion/dynamics.hpp"
#include "meyerion/ellis.hpp"
#include "meyerion/errors.hpp"
#include "meyerion/io.hpp"
#include "meyerion/model_set.hpp"
#include "meyerion/rational.hpp"
#include "meyerion/scheme.hpp"
#include "meyerion/substitution.hpp"

namespace {

using namespace meyerion;
using nlohmann::json;

// Command name, input identity and every parameter, echoed in each report.
struct Echo {
  std::string command;
  std::string input;
  std::string input_hash;
  std::vector<std::pair<std::string, std::string>> params;

  void Add(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }

  std::string Header() const {
    std::ostringstream out;
    out << "# meyerion " << command << '\n';
    out << "# input: " << input << " (hash " << input_hash << ")\n";
    for (const auto& [k, v] : params) out << "# param " << k << '=' << v << '\n';
    return out.str();
  }

  json Json() const {
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return {{"command", command}, {"input", input}, {"input_hash", input_hash}, {"params", p}};
  }
};

Echo SchemeEcho(const std::string& command, const std::string& path, const Scheme& scheme) {
  return Echo{command, path + " [" + scheme.name() + "]", scheme.Fingerprint(), {}};
}

FieldScalar ParseScalarParam(const std::string& name, const std::string& text) {
  try {
    return FieldScalar(ParseRational(text));
  } catch (const std::exception& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

mpq_class ParseRationalParam(const std::string& name, const std::string& text) {
  try {
    return ParseRational(text);
  } catch (const std::exception& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

FieldScalar PositiveRadius(const std::string& name, const std::string& text) {
  FieldScalar r = ParseScalarParam(name, text);
  if (r.sign() <= 0) throw InputError("--" + name + " must be positive");
  return r;
}

FieldVector ParsePhysicalOrInternal(const std::string& name, const std::string& text,
                                    const Scheme& scheme, std::size_t dim) {
  FieldVector v;
  try {
    v = ParseVector(text, scheme.discriminant());
  } catch (const std::exception& e) {
    throw InputError("--" + name + ": " + e.what());
  }
  if (v.size() != dim) {
    throw InputError("--" + name + " needs " + std::to_string(dim) + " components");
  }
  return v;
}

std::pair<FieldVector, std::string> SplitTyped(const std::string& name, const std::string& text,
                                               const Scheme& scheme) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw InputError("--" + name + " must look like \"<xi>;<signs>\"");
  auto signs = text.substr(semi + 1);
  signs.erase(std::remove_if(signs.begin(), signs.end(), [](unsigned char c) { return std::isspace(c); }),
              signs.end());
  return {ParsePhysicalOrInternal(name, text.substr(0, semi), scheme, scheme.internal_dim()), signs};
}

void Emit(const std::string& text) { std::cout << text; }

void MaybeWrite(const std::string& path, const std::string& content) {
  if (!path.empty()) WriteTextFile(path, content);
}

std::vector<FieldScalar> ParseRadiusList(const std::string& name, const std::string& text) {
  std::vector<FieldScalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(PositiveRadius(name, item));
  if (out.empty()) throw InputError("--" + name + " is empty");
  return out;
}

// ---------------------------------------------------------------------------

int SchemeValidate(const std::string& path, const std::string& json_out) {
  const Scheme scheme = LoadScheme(path);
  Echo echo = SchemeEcho("scheme validate", path, scheme);
  const ValidationReport report = ValidateScheme(scheme);
  std::ostringstream out;
  out << echo.Header();
  json items = json::array();
  for (const auto& item : report.items) {
    out << ToString(item.status) << ' ' << item.check << ": " << item.detail << '\n';
    items.push_back({{"check", item.check}, {"status", ToString(item.status)}, {"detail", item.detail}});
  }
  out << (report.ok() ? "scheme is valid\n" : "scheme is NOT valid\n");
  Emit(out.str());
  json doc = echo.Json();
  doc["items"] = items;
  doc["ok"] = report.ok();
  MaybeWrite(json_out, doc.dump(2) + "\n");
  return report.ok() ? 0 : 1;
}

struct GenerateOptions {
  std::string path, radius = "5", shift, window = "closed", cone, convention, svg, output;
};

int SchemeGenerate(const GenerateOptions& o) {
  const Scheme scheme = LoadScheme(o.path);
  Echo echo = SchemeEcho("scheme generate", o.path, scheme);
  const FieldScalar radius = PositiveRadius("radius", o.radius);
  const FieldVector shift = o.shift.empty() ? FieldVector(scheme.internal_dim())
                                            : ParsePhysicalOrInternal("shift", o.shift, scheme,
                                                                      scheme.internal_dim());
  GenerationPolicy policy;
  if (o.window == "closed") {
    policy = GenerationPolicy::Closed();
  } else if (o.window == "open") {
    policy = GenerationPolicy::Open();
  } else if (o.window == "cone") {
    if (o.cone.empty()) throw InputError("--window cone needs --cone");
    BoundaryConvention convention = DefaultBoundaryConvention();
    if (!o.convention.empty()) {
      if (o.convention == ToString(BoundaryConvention::kOutwardPositive)) {
        convention = BoundaryConvention::kOutwardPositive;
      } else if (o.convention == ToString(BoundaryConvention::kOutwardNegative)) {
        convention = BoundaryConvention::kOutwardNegative;
      } else {
        throw InputError("unknown --convention " + o.convention);
      }
    }
    policy = GenerationPolicy::ConeLimit(
        ParsePhysicalOrInternal("cone", o.cone, scheme, scheme.internal_dim()), convention);
  } else {
    throw InputError("--window must be closed, open or cone");
  }
  echo.Add("radius", radius.to_string());
  echo.Add("shift", ToString(shift));
  echo.Add("policy", policy.to_string());
  const PointPattern pattern = GenerateModelSet(scheme, shift, radius, policy);
  json doc = echo.Json();
  doc["pattern"] = PatternToJson(pattern);
  const std::string text = doc.dump(2) + "\n";
  Emit(text);
  MaybeWrite(o.output, text);
  if (!o.svg.empty()) {
    const PointPattern one[] = {pattern};
    WriteTextFile(o.svg, PatternSvg(one));
  }
  return 0;
}

int ArrangementAnalyze(const std::string& path, const std::string& json_out) {
  const Scheme scheme = LoadScheme(path);
  Echo echo = SchemeEcho("arrangement analyze", path, scheme);
  const Arrangement a = AnalyzeArrangement(scheme);
  std::ostringstream out;
  out << echo.Header();
  out << "cut types (" << a.census.realized.size() << ", from " << a.census.samples << " samples):";
  for (const auto& c : a.census.realized) out << ' ' << c.to_string();
  out << "\npoint types: " << a.point_types.size() << " (sign vectors over all domains: "
      << a.all_sign_vectors << ")\n";
  out << "signs,domain,witness\n";
  for (const auto& p : a.point_types) {
    out << p.to_string() << ',' << p.domain().to_string() << ",\"" << ToString(p.witness) << "\"\n";
  }
  out << "transformation types: " << a.transformation_types.size()
      << (a.minimal_complexity ? " (minimal complexity)" : " (NOT minimal complexity)") << '\n';
  out << "signs,effective,cone_dimension\n";
  for (const auto& t : a.transformation_types) {
    out << t.to_string() << ',' << (t.effective() ? "yes" : "no") << ',' << t.cone_dimension << '\n';
  }
  Emit(out.str());
  json doc = echo.Json();
  doc["arrangement"] = ArrangementJson(a);
  MaybeWrite(json_out, doc.dump(2) + "\n");
  return 0;
}

int EllisTable(const std::string& path, const std::string& csv_out, const std::string& json_out) {
  const Scheme scheme = LoadScheme(path);
  Echo echo = SchemeEcho("ellis table", path, scheme);
  const Arrangement a = AnalyzeArrangement(scheme);
  const StructureReport report = BuildStructureReport(scheme, a);
  const std::string csv = report.CayleyCsv();
  std::ostringstream out;
  out << echo.Header() << csv;
  out << "# minimal ideal (" << report.minimal_ideal.size() << "):";
  json ideal = json::array(), hasse = json::array(), groups = json::array();
  for (auto i : report.minimal_ideal) {
    out << ' ' << report.groups[i].type.to_string();
    ideal.push_back(report.groups[i].type.to_string());
  }
  out << "\n# hasse edges (upper > lower):";
  for (const auto& [u, l] : report.hasse) {
    out << ' ' << report.groups[u].type.to_string() << '>' << report.groups[l].type.to_string();
    hasse.push_back({report.groups[u].type.to_string(), report.groups[l].type.to_string()});
  }
  out << "\n# groups: type | span dim | E(Xi, Z^N) component | suspension component\n";
  for (const auto& g : report.groups) {
    out << "# " << g.type.to_string() << " | " << g.span_dimension << " | " << g.reduced_group << " | "
        << g.suspended_group << '\n';
    groups.push_back({{"type", g.type.to_string()},
                      {"span_dimension", g.span_dimension},
                      {"group", g.reduced_group},
                      {"suspension_group", g.suspended_group}});
  }
  Emit(out.str());
  MaybeWrite(csv_out, csv);
  json doc = echo.Json();
  doc["minimal_ideal"] = ideal;
  doc["hasse"] = hasse;
  doc["groups"] = groups;
  doc["cayley_csv_hash"] = HashHex(csv);
  MaybeWrite(json_out, doc.dump(2) + "\n");
  return 0;
}

int EllisAct(const std::string& path, const std::string& element, const std::string& point) {
  const Scheme scheme = LoadScheme(path);
  Echo echo = SchemeEcho("ellis act", path, scheme);
  const Arrangement a = AnalyzeArrangement(scheme);
  const auto [exi, esigns] = SplitTyped("element", element, scheme);
  const auto [pxi, psigns] = SplitTyped("point", point, scheme);
  const EllisElement e = MakeEllisElement(scheme, exi, ParseTransformationType(scheme, esigns));
  const XiPoint x = MakeXiPoint(scheme, pxi, ParsePointType(scheme, psigns));
  echo.Add("element", e.to_string());
  echo.Add("point", x.to_string());
  const XiPoint y = EllisAction(scheme, e, x);
  std::ostringstream out;
  out << echo.Header() << "result: " << y.to_string() << '\n'
      << "cut type: " << y.type.domain().to_string() << '\n';
  Emit(out.str());
  return 0;
}

struct FiberOptions {
  std::string path, xi, radius = "10", probe = "5", box = "40", svg, csv, json_out;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

int Fiber(const FiberOptions& o) {
  const Scheme scheme = LoadScheme(o.path);
  Echo echo = SchemeEcho("fiber", o.path, scheme);
  const Arrangement a = AnalyzeArrangement(scheme);
  const FieldVector xi = ParsePhysicalOrInternal("xi", o.xi, scheme, scheme.internal_dim());
  const FieldScalar radius = PositiveRadius("radius", o.radius);
  const FieldScalar probe = PositiveRadius("probe-radius", o.probe);
  const mpq_class box = ParseRationalParam("box", o.box);
  if (box < 0) throw InputError("--box must be nonnegative");
  echo.Add("xi", ToString(xi));
  echo.Add("radius", radius.to_string());
  echo.Add("probe_radius", probe.to_string());
  echo.Add("box", box.get_str());
  echo.Add("samples", std::to_string(o.samples));
  echo.Add("seed", std::to_string(o.seed));
  const FiberSet fiber = FiberElements(scheme, a, xi);
  FieldScalar gen = CoverageRadius(scheme.physical_dim(), box, probe);
  if (Compare(gen, radius) < 0) gen = radius;
  const auto patterns = fiber.Patterns(scheme, gen);

  std::ostringstream out;
  json doc = echo.Json();
  out << echo.Header();
  out << "xi: " << ToString(fiber.xi) << "\ncut type: " << fiber.cut.to_string() << '\n';
  out << "fiber elements: " << fiber.elements.size() << "\nindex,point_type,cone_witness,points_in_B_R\n";
  json elements = json::array();
  const FieldVector origin(scheme.physical_dim());
  for (std::size_t i = 0; i < fiber.elements.size(); ++i) {
    const auto& e = fiber.elements[i];
    const std::size_t count = patterns[i].InBall(origin, radius).size();
    out << i << ',' << e.type.to_string() << ",\"" << ToString(e.type.witness) << "\"," << count << '\n';
    elements.push_back({{"point_type", e.type.to_string()},
                        {"cone_witness", ToString(e.type.witness)},
                        {"policy", e.policy.to_string()},
                        {"points_in_ball", count}});
  }
  doc["cut_type"] = fiber.cut.to_string();
  doc["elements"] = elements;

  std::vector<FieldScalar> nr_radii{FieldScalar(mpq_class(1, 2)), 1, 2, probe, radius};
  std::sort(nr_radii.begin(), nr_radii.end(), [](const auto& x, const auto& y) { return Compare(x, y) < 0; });
  nr_radii.erase(std::unique(nr_radii.begin(), nr_radii.end()), nr_radii.end());
  out << "n^R at 0:";
  json nr = json::array();
  for (const auto& r : nr_radii) {
    if (Compare(r, radius) > 0) continue;
    const std::size_t n = DistinctPatchCount(patterns, origin, r);
    out << " R=" << r.to_string() << ":" << n;
    nr.push_back({{"radius", r.to_string()}, {"count", n}});
  }
  out << '\n';
  doc["n_R"] = nr;

  std::string csv = "radius,count,density\n";
  if (patterns.size() >= 2) {
    const FieldScalar radii[] = {radius / FieldScalar(4), radius / FieldScalar(2), radius};
    const DensityEstimate d = StatisticalCoincidence(patterns[0], patterns[1], radii);
    csv.clear();
    csv = "radius,count,density\n";
    for (std::size_t i = 0; i < d.radii.size(); ++i) {
      csv += d.radii[i].to_string() + "," + std::to_string(d.counts[i]) + "," +
             FormatFixed(d.densities[i], 9) + "\n";
    }
    out << "symmetric difference of elements 0 and 1:\n" << csv;
  } else {
    out << "symmetric difference: single fiber element\n";
  }
  doc["density_csv"] = csv;

  const auto translates = SampleTranslates(scheme.physical_dim(), box, o.samples, o.seed);
  const CoincidenceRank cr = EstimateCoincidenceRank(patterns, probe, translates);
  const SingleClassFraction single = SinglePatchFraction(patterns, probe, translates);
  out << "coincidence rank estimate (upper bound from " << cr.samples << " translates): " << cr.estimate
      << '\n';
  out << "coincident pairs with witness: " << cr.witnesses.size()
      << ", pairs without: " << cr.non_coincident.size() << '\n';
  out << "translates with a single probe patch: " << single.single << '/' << single.samples << " ("
      << FormatFixed(single.fraction(), 4) << ")\n";
  json witnesses = json::array();
  for (const auto& w : cr.witnesses) witnesses.push_back({w.i, w.j, ToString(w.t)});
  doc["coincidence_rank"] = {{"estimate", cr.estimate},
                             {"witnesses", witnesses},
                             {"single_patch_fraction", FormatFixed(single.fraction(), 6)}};
  Emit(out.str());
  MaybeWrite(o.csv, csv);
  MaybeWrite(o.json_out, doc.dump(2) + "\n");
  if (!o.svg.empty()) {
    std::vector<PointPattern> shown;
    for (const auto& p : patterns) shown.push_back(BallPatch(p, origin, radius));
    WriteTextFile(o.svg, PatternSvg(shown));
  }
  return 0;
}

int SubstClassify(const std::string& rules, const std::string& lengths, const std::string& json_out) {
  const Substitution1D s = ParseSubstitution(rules);
  const LengthMode mode = ParseLengthMode(lengths);
  Echo echo{"subst classify", s.to_string(), HashHex(s.to_string()), {}};
  echo.Add("lengths", lengths);
  const SpectralReport report = Classify(s, mode);
  Emit(echo.Header() + report.Text());
  json doc = echo.Json();
  doc["report"] = report.Json();
  MaybeWrite(json_out, doc.dump(2) + "\n");
  return 0;
}

Echo PatternPairEcho(const std::string& command, const std::string& a, const std::string& b,
                     const PointPattern& pa, const PointPattern& pb) {
  const std::string ha = HashHex(PatternToJson(pa).dump()), hb = HashHex(PatternToJson(pb).dump());
  return Echo{command, a + " " + b, ha + "/" + hb, {}};
}

int Metric(const std::string& a, const std::string& b, const std::string& step_text,
           const std::string& max_text) {
  const PointPattern pa = LoadPattern(a), pb = LoadPattern(b);
  Echo echo = PatternPairEcho("metric", a, b, pa, pb);
  const mpq_class step = ParseRationalParam("step", step_text);
  const mpq_class max_eps = ParseRationalParam("max-epsilon", max_text);
  echo.Add("step", step.get_str());
  echo.Add("max_epsilon", max_eps.get_str());
  const MetricBound bound = HullMetricUpper(pa, pb, step, max_eps);
  std::ostringstream out;
  out << echo.Header();
  if (bound.found) {
    out << "upper bound: " << bound.value.get_str() << " (" << FormatFixed(bound.value.get_d(), 9)
        << ")\nepsilon: " << bound.epsilon.get_str() << "\nt: " << ToString(bound.t)
        << "\nt': " << ToString(bound.t_prime) << '\n';
  } else {
    out << "upper bound: 1 (no candidate matched up to epsilon " << max_eps.get_str() << ")\n";
  }
  out << "candidates checked: " << bound.candidates << '\n';
  Emit(out.str());
  return 0;
}

int Proximality(const std::string& a, const std::string& b, const std::string& probe_text,
                const std::string& box_text, const std::string& step_text, const std::string& radii_text) {
  const PointPattern pa = LoadPattern(a), pb = LoadPattern(b);
  Echo echo = PatternPairEcho("proximality", a, b, pa, pb);
  const FieldScalar probe = PositiveRadius("probe-radius", probe_text);
  const mpq_class box = ParseRationalParam("box", box_text);
  const mpq_class step = ParseRationalParam("step", step_text);
  echo.Add("probe_radius", probe.to_string());
  echo.Add("box", box.get_str());
  echo.Add("step", step.get_str());
  if (!radii_text.empty()) echo.Add("radii", radii_text);
  std::ostringstream out;
  out << echo.Header();
  const auto w = StrongProximalWitness(pa, pb, probe, box / 2, step);
  out << "strong proximality witness at R=" << probe.to_string() << ": "
      << (w ? "t = (" + ToString(*w) + ")" : std::string("NOT-FOUND")) << '\n';
  if (!radii_text.empty()) {
    const auto radii = ParseRadiusList("radii", radii_text);
    out << StatisticalCoincidence(pa, pb, radii).Csv();
  }
  Emit(out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meyerion: exact cut-and-project sets, their arrangements, Ellis semigroups and dynamics"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* scheme = app.add_subcommand("scheme", "scheme files")->require_subcommand(1);
  std::string path, json_out, csv_out;

  auto* validate = scheme->add_subcommand("validate", "check the scheme invariants");
  validate->add_option("scheme", path, "scheme JSON")->required();
  validate->add_option("--json", json_out, "write the report as JSON");
  validate->callback([&] { action = [&] { return SchemeValidate(path, json_out); }; });

  GenerateOptions gen;
  auto* generate = scheme->add_subcommand("generate", "model set points in a ball");
  generate->add_option("scheme", gen.path, "scheme JSON")->required();
  generate->add_option("--radius", gen.radius, "ball radius (rational)");
  generate->add_option("--shift", gen.shift, "internal shift y, comma-separated");
  generate->add_option("--window", gen.window, "closed | open | cone");
  generate->add_option("--cone", gen.cone, "cone direction for --window cone");
  generate->add_option("--convention", gen.convention, "outward-positive | outward-negative");
  generate->add_option("--svg", gen.svg, "write an SVG picture");
  generate->add_option("--output", gen.output, "also write the JSON to a file");
  generate->callback([&] { action = [&] { return SchemeGenerate(gen); }; });

  auto* arrangement = app.add_subcommand("arrangement", "singular hyperplane arrangement")->require_subcommand(1);
  auto* analyze = arrangement->add_subcommand("analyze", "cut, point and transformation types");
  analyze->add_option("scheme", path, "scheme JSON")->required();
  analyze->add_option("--json", json_out, "write the report as JSON");
  analyze->callback([&] { action = [&] { return ArrangementAnalyze(path, json_out); }; });

  auto* ellis = app.add_subcommand("ellis", "Ellis semigroup")->require_subcommand(1);
  auto* table = ellis->add_subcommand("table", "Cayley table, minimal ideal and order");
  table->add_option("scheme", path, "scheme JSON")->required();
  table->add_option("--csv", csv_out, "write the Cayley table CSV");
  table->add_option("--json", json_out, "write ideal, order and groups as JSON");
  table->callback([&] { action = [&] { return EllisTable(path, csv_out, json_out); }; });

  std::string element, point;
  auto* act = ellis->add_subcommand("act", "apply an element to a point of Xi");
  act->add_option("scheme", path, "scheme JSON")->required();
  act->add_option("--element", element, "\"<xi>;<signs>\"")->required();
  act->add_option("--point", point, "\"<xi>;<signs>\"")->required();
  act->callback([&] { action = [&] { return EllisAct(path, element, point); }; });

  FiberOptions fib;
  auto* fiber = app.add_subcommand("fiber", "fiber over a torus point");
  fiber->add_option("scheme", fib.path, "scheme JSON")->required();
  fiber->add_option("--xi", fib.xi, "torus point, comma-separated")->required();
  fiber->add_option("--radius", fib.radius, "pattern radius R");
  fiber->add_option("--probe-radius", fib.probe, "patch radius for coincidence checks");
  fiber->add_option("--samples", fib.samples, "number of sampled translates");
  fiber->add_option("--box", fib.box, "side of the translate box");
  fiber->add_option("--seed", fib.seed, "sampling seed");
  fiber->add_option("--svg", fib.svg, "write the fiber patterns as SVG");
  fiber->add_option("--csv", fib.csv, "write the density series CSV");
  fiber->add_option("--json", fib.json_out, "write the report as JSON");
  fiber->callback([&] { action = [&] { return Fiber(fib); }; });

  std::string rules, lengths = "natural";
  auto* subst = app.add_subcommand("subst", "one-dimensional substitutions")->require_subcommand(1);
  auto* classify = subst->add_subcommand("classify", "spectral classification");
  classify->add_option("--rules", rules, "e.g. \"a:ab,b:a\"")->required();
  classify->add_option("--lengths", lengths, "natural | unit");
  classify->add_option("--json", json_out, "write the report as JSON");
  classify->callback([&] { action = [&] { return SubstClassify(rules, lengths, json_out); }; });

  std::string pa, pb, step = "1/20", max_eps = "1", probe = "5", box = "10", witness_step = "1/4", radii;
  auto* metric = app.add_subcommand("metric", "upper bound on the hull metric");
  metric->add_option("a", pa, "pattern JSON (as written by scheme generate)")->required();
  metric->add_option("b", pb, "pattern JSON")->required();
  metric->add_option("--step", step, "grid step for eps, t and t'");
  metric->add_option("--max-epsilon", max_eps, "largest eps tried");
  metric->callback([&] { action = [&] { return Metric(pa, pb, step, max_eps); }; });

  auto* prox = app.add_subcommand("proximality", "strong proximality and statistical coincidence");
  prox->add_option("a", pa, "pattern JSON")->required();
  prox->add_option("b", pb, "pattern JSON")->required();
  prox->add_option("--probe-radius", probe, "patch radius R");
  prox->add_option("--box", box, "side of the witness search box");
  prox->add_option("--step", witness_step, "grid step of the witness candidates");
  prox->add_option("--radii", radii, "radii for symmetric-difference densities");
  prox->callback([&] { action = [&] { return Proximality(pa, pb, probe, box, witness_step, radii); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const ReliabilityError& e) {
    std::cerr << "unreliable: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  }
}
