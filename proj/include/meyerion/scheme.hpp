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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "meyerion/field_scalar.hpp"
#include "meyerion/lattice.hpp"
#include "meyerion/polyhedra.hpp"

namespace meyerion {

/// Closed half-space <normal, h> <= offset.
struct Halfspace {
  FieldVector normal;
  FieldScalar offset;
};

/// Affine hyperplane A = H0 + offset_point, with H0 = ker(form).
struct SingularHyperplane {
  FieldVector form;
  FieldVector offset_point;
};

/// Plain data of a cut-and-project scheme over Z^(N + N_perp), as stored in
/// scheme files.
struct SchemeDescription {
  std::string name;
  std::size_t physical_dim = 0;
  std::size_t internal_dim = 0;
  std::int64_t discriminant = 0;
  FieldMatrix p1;  // physical_dim x rank
  FieldMatrix p2;  // internal_dim x rank
  std::vector<Halfspace> window;
  std::vector<SingularHyperplane> hyperplanes;
  std::vector<IntVector> transversal;  // internal_dim vectors in Z^rank
};

/// A scheme with its derived data (lattice images, stacked inverse, torus
/// basis). Construction checks shapes and the single-discriminant rule;
/// the mathematical invariants are reported by ValidateScheme.
class Scheme {
 public:
  explicit Scheme(SchemeDescription description);

  const SchemeDescription& description() const { return description_; }
  const std::string& name() const { return description_.name; }
  std::size_t physical_dim() const { return description_.physical_dim; }
  std::size_t internal_dim() const { return description_.internal_dim; }
  std::size_t rank() const { return description_.physical_dim + description_.internal_dim; }
  std::int64_t discriminant() const { return description_.discriminant; }
  const std::vector<Halfspace>& window() const { return description_.window; }
  const std::vector<SingularHyperplane>& hyperplanes() const { return description_.hyperplanes; }

  FieldVector Physical(std::span<const mpz_class> z) const;
  FieldVector Internal(std::span<const mpz_class> z) const;

  /// p2 images of the standard basis: generators of Gamma.
  const std::vector<FieldVector>& gamma_generators() const { return gamma_generators_; }
  /// p2 images of the transversal vectors: basis of Delta (as rows).
  const FieldMatrix& delta_basis() const { return delta_basis_; }
  /// Inverse of the stacked [p1; p2]; empty if singular.
  const FieldMatrix& stacked_inverse() const { return stacked_inverse_; }
  bool delta_spans() const { return !delta_inverse_.empty(); }

  /// Coordinates of h in the Delta basis (h = sum_j c_j delta_j).
  FieldVector DeltaCoordinates(std::span<const FieldScalar> h) const;

  /// Window membership of h - shift: closed or open.
  bool WindowContains(std::span<const FieldScalar> h, bool closed) const;

  /// Content hash of the scheme (stable across runs).
  std::string Fingerprint() const;

 private:
  SchemeDescription description_;
  std::vector<FieldVector> gamma_generators_;
  FieldMatrix delta_basis_;
  FieldMatrix delta_inverse_;
  FieldMatrix stacked_inverse_;
};

enum class CheckStatus { kPass, kWarn, kFail };
const char* ToString(CheckStatus status);

struct ValidationItem {
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;  // no FAIL
  CheckStatus StatusOf(const std::string& check) const;
};

ValidationReport ValidateScheme(const Scheme& scheme);

/// Canonical representative of h modulo Delta with every Delta coordinate
/// in [0, 1).
FieldVector TorusReduce(const Scheme& scheme, std::span<const FieldScalar> h);

/// Representative of h modulo Delta with every Delta coordinate in
/// [-1/2, 1/2).
FieldVector TorusLiftNearZero(const Scheme& scheme, std::span<const FieldScalar> h);

// Scheme files (JSON).
SchemeDescription ParseSchemeJson(const nlohmann::json& doc);
nlohmann::json SchemeToJson(const SchemeDescription& description);
Scheme LoadScheme(const std::string& path);

}  // namespace meyerion
