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

#include "meyerion/scheme.hpp"

#include <fstream>
#include <sstream>

#include "meyerion/errors.hpp"

namespace meyerion {

namespace {

void CheckDiscriminant(const FieldScalar& x, std::int64_t d, const std::string& where) {
  if (x.discriminant() != 0 && x.discriminant() != d) {
    throw InputError(where + ": radicand sqrt(" + std::to_string(x.discriminant()) +
                     ") does not match the scheme discriminant " + std::to_string(d));
  }
}

void CheckVector(const FieldVector& v, std::size_t dim, std::int64_t d, const std::string& where) {
  if (v.size() != dim) {
    throw InputError(where + ": expected " + std::to_string(dim) + " entries, got " +
                     std::to_string(v.size()));
  }
  for (const auto& x : v) CheckDiscriminant(x, d, where);
}

std::uint64_t Fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Scheme::Scheme(SchemeDescription description) : description_(std::move(description)) {
  const auto& s = description_;
  const std::size_t n = rank();
  if (s.physical_dim == 0 || s.internal_dim == 0) throw InputError("dimensions must be positive");
  if (s.discriminant != 0 && !IsSquareFree(s.discriminant)) {
    throw InputError("discriminant must be square-free >= 2");
  }
  if (s.p1.size() != s.physical_dim) throw InputError("p1: expected physical_dim rows");
  if (s.p2.size() != s.internal_dim) throw InputError("p2: expected internal_dim rows");
  for (const auto& row : s.p1) CheckVector(row, n, s.discriminant, "p1");
  for (const auto& row : s.p2) CheckVector(row, n, s.discriminant, "p2");
  if (s.window.empty()) throw InputError("window: no half-spaces");
  for (const auto& f : s.window) {
    CheckVector(f.normal, s.internal_dim, s.discriminant, "window.normals");
    CheckDiscriminant(f.offset, s.discriminant, "window.offsets");
  }
  for (const auto& h : s.hyperplanes) {
    CheckVector(h.form, s.internal_dim, s.discriminant, "hyperplanes.form");
    CheckVector(h.offset_point, s.internal_dim, s.discriminant, "hyperplanes.offset_point");
    if (IsZeroVector(h.form)) throw InputError("hyperplanes.form: zero form");
  }
  if (s.transversal.size() != s.internal_dim) {
    throw InputError("transversal: expected internal_dim integer vectors");
  }
  for (const auto& t : s.transversal) {
    if (t.size() != n) throw InputError("transversal: vectors must have lattice rank entries");
  }

  for (std::size_t k = 0; k < n; ++k) {
    FieldVector g(s.internal_dim);
    for (std::size_t r = 0; r < s.internal_dim; ++r) g[r] = s.p2[r][k];
    gamma_generators_.push_back(std::move(g));
  }
  for (const auto& t : s.transversal) delta_basis_.push_back(Internal(t));
  if (Rank(delta_basis_) == s.internal_dim) delta_inverse_ = Inverse(Transpose(delta_basis_));

  FieldMatrix stacked = s.p1;
  stacked.insert(stacked.end(), s.p2.begin(), s.p2.end());
  if (!Determinant(stacked).is_zero()) stacked_inverse_ = Inverse(stacked);
}

FieldVector Scheme::Physical(std::span<const mpz_class> z) const {
  FieldVector out;
  for (const auto& row : description_.p1) {
    FieldScalar acc;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k] != 0 && !row[k].is_zero()) acc += row[k] * FieldScalar(mpq_class(z[k]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FieldVector Scheme::Internal(std::span<const mpz_class> z) const {
  FieldVector out;
  for (const auto& row : description_.p2) {
    FieldScalar acc;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k] != 0 && !row[k].is_zero()) acc += row[k] * FieldScalar(mpq_class(z[k]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FieldVector Scheme::DeltaCoordinates(std::span<const FieldScalar> h) const {
  if (delta_inverse_.empty()) throw InputError("transversal lattice does not span internal space");
  return MatVec(delta_inverse_, h);
}

bool Scheme::WindowContains(std::span<const FieldScalar> h, bool closed) const {
  for (const auto& f : description_.window) {
    const int s = (Dot(f.normal, h) - f.offset).sign();
    if (s > 0 || (!closed && s == 0)) return false;
  }
  return true;
}

std::string Scheme::Fingerprint() const {
  std::ostringstream out;
  out << std::hex << Fnv1a(SchemeToJson(description_).dump());
  return out.str();
}

const char* ToString(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kWarn:
      return "WARN";
    case CheckStatus::kFail:
      return "FAIL";
  }
  return "?";
}

bool ValidationReport::ok() const {
  for (const auto& item : items) {
    if (item.status == CheckStatus::kFail) return false;
  }
  return true;
}

CheckStatus ValidationReport::StatusOf(const std::string& check) const {
  for (const auto& item : items) {
    if (item.check == check) return item.status;
  }
  throw InputError("no validation item named " + check);
}

namespace {

// Rank over Q of field vectors viewed in Q^(2m).
std::size_t RationalRank(const std::vector<FieldVector>& vectors) {
  FieldMatrix m;
  for (const auto& v : vectors) {
    FieldVector row;
    for (const auto& q : RationalCoordinates(v)) row.emplace_back(q);
    m.push_back(std::move(row));
  }
  return m.empty() ? 0 : Rank(std::move(m));
}

ValidationItem CheckInjectivity(const Scheme& s) {
  std::vector<FieldVector> columns;
  for (std::size_t k = 0; k < s.rank(); ++k) {
    FieldVector c;
    for (const auto& row : s.description().p1) c.push_back(row[k]);
    columns.push_back(std::move(c));
  }
  const std::size_t r = RationalRank(columns);
  if (r == s.rank()) return {"p1_injective", CheckStatus::kPass, "rational kernel of p1 is trivial"};
  return {"p1_injective", CheckStatus::kFail,
          "p1 has a rational kernel of dimension " + std::to_string(s.rank() - r)};
}

ValidationItem CheckStacked(const Scheme& s) {
  if (!s.stacked_inverse().empty()) {
    return {"stacked_invertible", CheckStatus::kPass, "[p1; p2] has nonzero determinant"};
  }
  return {"stacked_invertible", CheckStatus::kFail, "[p1; p2] is singular"};
}

// Sufficient test: a basis of R^(N_perp) among the Gamma generators, and the
// radical parts of the remaining generators' coordinates in that basis have
// full rank. Then no nonzero functional is integral on Gamma.
ValidationItem CheckDensity(const Scheme& s) {
  const auto& gens = s.gamma_generators();
  const std::size_t m = s.internal_dim();
  if (Rank(FieldMatrix(gens.begin(), gens.end())) < m) {
    return {"p2_dense", CheckStatus::kFail, "p2 image does not span internal space"};
  }
  FieldMatrix basis;
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < gens.size() && basis.size() < m; ++k) {
    FieldMatrix trial = basis;
    trial.push_back(gens[k]);
    if (Rank(trial) == trial.size()) {
      basis = std::move(trial);
      chosen.push_back(k);
    }
  }
  const FieldMatrix to_coords = Inverse(Transpose(basis));
  FieldMatrix radical_parts;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
    FieldVector row;
    for (const auto& c : MatVec(to_coords, gens[k])) row.emplace_back(c.radical_part());
    radical_parts.push_back(std::move(row));
  }
  if (!radical_parts.empty() && Rank(radical_parts) == m) {
    return {"p2_dense", CheckStatus::kPass,
            "irrational coordinates in every direction of a Gamma basis"};
  }
  return {"p2_dense", CheckStatus::kWarn, "sufficient density test inconclusive"};
}

ValidationItem CheckWindow(const Scheme& s) {
  const std::size_t m = s.internal_dim();
  std::vector<LinearForm> interior;
  for (const auto& f : s.window()) {
    interior.push_back(LinearForm{Scale(FieldScalar(-1), f.normal), f.offset, Relation::kPositive});
  }
  if (!FmFeasible(interior, m).feasible) {
    return {"window", CheckStatus::kFail, "window has empty interior"};
  }
  // Bounded iff the recession cone {x : <n, x> <= 0} is {0}.
  for (std::size_t j = 0; j < m; ++j) {
    for (int sign : {1, -1}) {
      std::vector<LinearForm> recession;
      for (const auto& f : s.window()) {
        recession.push_back(
            LinearForm{Scale(FieldScalar(-1), f.normal), FieldScalar(0), Relation::kNonNegative});
      }
      FieldVector e(m);
      e[j] = FieldScalar(sign);
      recession.push_back(LinearForm{e, FieldScalar(0), Relation::kPositive});
      if (FmFeasible(recession, m).feasible) {
        return {"window", CheckStatus::kFail, "window is unbounded"};
      }
    }
  }
  return {"window", CheckStatus::kPass, "bounded polytope with nonempty interior"};
}

ValidationItem CheckHyperplanes(const Scheme& s) {
  if (s.hyperplanes().empty()) return {"hyperplanes", CheckStatus::kWarn, "no singular hyperplanes"};
  FieldMatrix forms;
  for (const auto& h : s.hyperplanes()) forms.push_back(h.form);
  if (Rank(forms) < s.internal_dim()) {
    return {"hyperplanes", CheckStatus::kFail, "linear hyperplanes intersect in a nonzero subspace"};
  }
  return {"hyperplanes", CheckStatus::kPass,
          std::to_string(forms.size()) + " hyperplanes with trivial common intersection"};
}

// Each window face should lie on a translate A_i + gamma (almost canonical).
ValidationItem CheckFacesAligned(const Scheme& s) {
  std::vector<RationalVector> dummy;
  for (const auto& f : s.window()) {
    bool found = false;
    for (const auto& h : s.hyperplanes()) {
      // Parallel: form is a multiple of the normal.
      FieldMatrix pair{f.normal, h.form};
      if (Rank(pair) != 1) continue;
      // Point on the face: offset * n / |n|^2.
      const FieldVector point = Scale(f.offset / SquaredNorm(f.normal), f.normal);
      const FieldScalar value = Dot(h.form, Subtract(point, h.offset_point));
      std::vector<RationalVector> images;
      for (const auto& g : s.gamma_generators()) {
        images.push_back(RationalCoordinates(FieldVector{Dot(h.form, g)}));
      }
      if (HnfMembership(images, RationalCoordinates(FieldVector{value})).member) {
        found = true;
        break;
      }
    }
    if (!found) {
      return {"faces_aligned", CheckStatus::kWarn,
              "a window face does not lie on a singular hyperplane translate by Gamma"};
    }
  }
  return {"faces_aligned", CheckStatus::kPass, "every window face lies in some A_i + Gamma"};
}

ValidationItem CheckDelta(const Scheme& s) {
  if (s.delta_spans()) {
    return {"delta_rank", CheckStatus::kPass,
            "p2(D) spans internal space (rank " + std::to_string(s.internal_dim()) + ")"};
  }
  return {"delta_rank", CheckStatus::kFail, "p2(D) does not span internal space"};
}

}  // namespace

ValidationReport ValidateScheme(const Scheme& scheme) {
  ValidationReport report;
  report.items.push_back(CheckInjectivity(scheme));
  report.items.push_back(CheckStacked(scheme));
  report.items.push_back(CheckDensity(scheme));
  report.items.push_back(CheckWindow(scheme));
  report.items.push_back(CheckHyperplanes(scheme));
  report.items.push_back(CheckFacesAligned(scheme));
  report.items.push_back(CheckDelta(scheme));
  report.items.push_back({"transversal_note", CheckStatus::kPass,
                          "different admissible transversals give conjugate reductions; "
                          "conjugacy is not verified"});
  return report;
}

FieldVector TorusReduce(const Scheme& scheme, std::span<const FieldScalar> h) {
  const FieldVector coords = scheme.DeltaCoordinates(h);
  FieldVector out(h.begin(), h.end());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const mpz_class k = coords[j].floor();
    if (k != 0) out = Subtract(out, Scale(FieldScalar(mpq_class(k)), scheme.delta_basis()[j]));
  }
  return out;
}

FieldVector TorusLiftNearZero(const Scheme& scheme, std::span<const FieldScalar> h) {
  const FieldVector coords = scheme.DeltaCoordinates(h);
  FieldVector out(h.begin(), h.end());
  const FieldScalar half(mpq_class(1, 2));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const mpz_class k = (coords[j] + half).floor();
    if (k != 0) out = Subtract(out, Scale(FieldScalar(mpq_class(k)), scheme.delta_basis()[j]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

FieldScalar ScalarFromJson(const nlohmann::json& j, std::int64_t d, const std::string& where) {
  try {
    if (j.is_string()) return FieldScalar::Parse(j.get<std::string>(), d);
    if (j.is_number_integer()) return FieldScalar(j.get<long>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a FieldScalar string");
}

FieldVector VectorFromJson(const nlohmann::json& j, std::int64_t d, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  FieldVector out;
  for (const auto& x : j) out.push_back(ScalarFromJson(x, d, where));
  return out;
}

nlohmann::json VectorToJson(const FieldVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

const nlohmann::json& Field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("scheme: missing key '") + key + "'");
  return doc.at(key);
}

}  // namespace

SchemeDescription ParseSchemeJson(const nlohmann::json& doc) {
  SchemeDescription s;
  try {
    s.name = Field(doc, "name").get<std::string>();
    s.physical_dim = Field(doc, "physical_dim").get<std::size_t>();
    s.internal_dim = Field(doc, "internal_dim").get<std::size_t>();
    s.discriminant = Field(doc, "discriminant").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("scheme header: ") + e.what());
  }
  for (const auto& row : Field(doc, "p1")) s.p1.push_back(VectorFromJson(row, s.discriminant, "p1"));
  for (const auto& row : Field(doc, "p2")) s.p2.push_back(VectorFromJson(row, s.discriminant, "p2"));
  const auto& window = Field(doc, "window");
  const auto& normals = Field(window, "normals");
  const auto& offsets = Field(window, "offsets");
  if (normals.size() != offsets.size()) throw InputError("window: normals/offsets length mismatch");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    s.window.push_back({VectorFromJson(normals[i], s.discriminant, "window.normals"),
                        ScalarFromJson(offsets[i], s.discriminant, "window.offsets")});
  }
  for (const auto& h : Field(doc, "hyperplanes")) {
    s.hyperplanes.push_back({VectorFromJson(Field(h, "form"), s.discriminant, "hyperplanes.form"),
                             VectorFromJson(Field(h, "offset_point"), s.discriminant,
                                            "hyperplanes.offset_point")});
  }
  for (const auto& t : Field(doc, "transversal")) {
    IntVector v;
    try {
      for (const auto& x : t) v.emplace_back(x.get<long>());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("transversal: ") + e.what());
    }
    s.transversal.push_back(std::move(v));
  }
  return s;
}

nlohmann::json SchemeToJson(const SchemeDescription& s) {
  nlohmann::json doc;
  doc["name"] = s.name;
  doc["physical_dim"] = s.physical_dim;
  doc["internal_dim"] = s.internal_dim;
  doc["discriminant"] = s.discriminant;
  doc["p1"] = nlohmann::json::array();
  for (const auto& row : s.p1) doc["p1"].push_back(VectorToJson(row));
  doc["p2"] = nlohmann::json::array();
  for (const auto& row : s.p2) doc["p2"].push_back(VectorToJson(row));
  nlohmann::json normals = nlohmann::json::array(), offsets = nlohmann::json::array();
  for (const auto& f : s.window) {
    normals.push_back(VectorToJson(f.normal));
    offsets.push_back(f.offset.to_string());
  }
  doc["window"] = {{"normals", normals}, {"offsets", offsets}};
  doc["hyperplanes"] = nlohmann::json::array();
  for (const auto& h : s.hyperplanes) {
    doc["hyperplanes"].push_back(
        {{"form", VectorToJson(h.form)}, {"offset_point", VectorToJson(h.offset_point)}});
  }
  doc["transversal"] = nlohmann::json::array();
  for (const auto& t : s.transversal) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : t) row.push_back(x.get_si());
    doc["transversal"].push_back(row);
  }
  return doc;
}

Scheme LoadScheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scheme file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("scheme file " + path + ": " + e.what());
  }
  return Scheme(ParseSchemeJson(doc));
}

}  // namespace meyerion
