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

#include "meyerion/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "meyerion/errors.hpp"

namespace meyerion {

std::string HashHex(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string out = buf;
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
  return out;
}

namespace {

nlohmann::json VectorJson(std::span<const FieldScalar> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

FieldVector VectorFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("expected an array of FieldScalar strings");
  FieldVector out;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError("expected a FieldScalar string, got " + x.dump());
    out.push_back(FieldScalar::Parse(x.get<std::string>()));
  }
  return out;
}

}  // namespace

nlohmann::json PatternToJson(const PointPattern& pattern) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : pattern.points()) points.push_back(VectorJson(p));
  return {{"provenance",
           {{"scheme", pattern.provenance().scheme},
            {"shift", pattern.provenance().shift},
            {"policy", pattern.provenance().policy}}},
          {"center", VectorJson(pattern.center())},
          {"radius", pattern.radius().to_string()},
          {"count", pattern.size()},
          {"points", points}};
}

PointPattern PatternFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("center") ||
      !doc.contains("radius")) {
    throw InputError("pattern document needs 'points', 'center' and 'radius'");
  }
  std::vector<FieldVector> points;
  for (const auto& p : doc["points"]) points.push_back(VectorFromJson(p));
  if (!doc["radius"].is_string()) throw InputError("pattern radius must be a string");
  Provenance provenance;
  if (doc.contains("provenance")) {
    provenance.scheme = doc["provenance"].value("scheme", "");
    provenance.shift = doc["provenance"].value("shift", "");
    provenance.policy = doc["provenance"].value("policy", "");
  }
  try {
    return PointPattern(std::move(points), VectorFromJson(doc["center"]),
                        FieldScalar::Parse(doc["radius"].get<std::string>()), provenance);
  } catch (const InvariantError& e) {
    throw InputError(std::string("invalid pattern: ") + e.what());
  }
}

PointPattern LoadPattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pattern file " + path);
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.is_object() && doc.contains("pattern")) return PatternFromJson(doc["pattern"]);
    return PatternFromJson(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("pattern file " + path + ": " + e.what());
  }
}

std::string PatternSvg(std::span<const PointPattern> patterns) {
  static const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double lo[2] = {0, 0}, hi[2] = {0, 0};
  bool any = false;
  for (const auto& p : patterns) {
    const double r = p.radius().to_double();
    const auto c = ToDoubles(p.center());
    for (std::size_t d = 0; d < 2; ++d) {
      const double x = d < c.size() ? c[d] : 0.0;
      lo[d] = any ? std::min(lo[d], x - r) : x - r;
      hi[d] = any ? std::max(hi[d], x + r) : x + r;
    }
    any = true;
  }
  const double margin = 0.5;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << FormatFixed(lo[0] - margin, 4)
      << ' ' << FormatFixed(-hi[1] - margin, 4) << ' ' << FormatFixed(hi[0] - lo[0] + 2 * margin, 4)
      << ' ' << FormatFixed(hi[1] - lo[1] + 2 * margin, 4) << "\">\n";
  out << "<rect x=\"" << FormatFixed(lo[0] - margin, 4) << "\" y=\"" << FormatFixed(-hi[1] - margin, 4)
      << "\" width=\"" << FormatFixed(hi[0] - lo[0] + 2 * margin, 4) << "\" height=\""
      << FormatFixed(hi[1] - lo[1] + 2 * margin, 4) << "\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    for (std::size_t i = 0; i < patterns[k].size(); ++i) {
      const auto& p = patterns[k].point(i);
      bool shared = true;
      for (const auto& other : patterns) shared = shared && other.Contains(p);
      if (shared && k > 0) continue;
      const auto x = ToDoubles(p);
      const std::string colour = shared ? "black" : kPalette[k % 8];
      out << "<circle cx=\"" << FormatFixed(x[0], 4) << "\" cy=\""
          << FormatFixed(x.size() > 1 ? -x[1] : 0.0, 4) << "\" r=\"0.08\" fill=\"" << colour
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

nlohmann::json ArrangementJson(const Arrangement& arrangement) {
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : arrangement.census.realized) cuts.push_back(c.to_string());
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : arrangement.point_types) {
    points.push_back({{"signs", p.to_string()},
                      {"domain", p.domain().to_string()},
                      {"witness", VectorJson(p.witness)}});
  }
  nlohmann::json transformations = nlohmann::json::array();
  for (const auto& t : arrangement.transformation_types) {
    const char* eff = t.effectiveness == Effectiveness::kEffective     ? "effective"
                      : t.effectiveness == Effectiveness::kIneffective ? "ineffective"
                                                                       : "unsupported";
    transformations.push_back({{"signs", t.to_string()},
                               {"effectiveness", eff},
                               {"cone_dimension", t.cone_dimension},
                               {"witness", VectorJson(t.witness)}});
  }
  return {{"cut_types", cuts},
          {"census_samples", arrangement.census.samples},
          {"point_types", points},
          {"point_type_count", arrangement.point_types.size()},
          {"sign_vectors_all_domains", arrangement.all_sign_vectors},
          {"transformation_types", transformations},
          {"transformation_type_count", arrangement.transformation_types.size()},
          {"minimal_complexity", arrangement.minimal_complexity}};
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace meyerion
