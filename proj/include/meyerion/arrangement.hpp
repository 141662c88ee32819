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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meyerion/field_scalar.hpp"
#include "meyerion/lattice.hpp"
#include "meyerion/polyhedra.hpp"
#include "meyerion/scheme.hpp"

namespace meyerion {

/// A sign of a point type (+, -, inf) or transformation type (+, -, 0).
/// Enumeration order is + < - < 0/inf.
enum class Sign { kPlus = 0, kMinus = 1, kZero = 2, kInfinity = 3 };

char SignChar(Sign sign);  // '+', '-', '0', '*'
Sign ParseSign(char c);    // accepts '+', '-', '0', '*'

/// A polyhedral cone at the origin of R^dim given by linear constraints.
struct Cone {
  std::size_t dim = 0;
  std::vector<LinearForm> constraints;

  static Cone Whole(std::size_t dim) { return Cone{dim, {}}; }
  bool Contains(std::span<const FieldScalar> x) const;
  /// Strict inequalities relaxed to non-strict.
  Cone Closure() const;
  /// Nonempty (exact Fourier-Motzkin).
  bool Feasible() const;
  /// Dimension of the linear span (= dim - rank of the equalities when the
  /// cone is relatively open and nonempty).
  std::size_t SpanDimension() const;
};

/// T_S(x) for a polyhedral cone S: constraints active at x, made non-strict.
/// Throws InputError when x is not in the closure of S.
Cone TangentCone(const Cone& cone, std::span<const FieldScalar> x);

/// True iff inner is a subset of outer (each outer constraint valid on inner).
bool ConeContains(const Cone& outer, const Cone& inner);

/// Hyperplane indices (0-based internally, 1-based in text).
struct CutType {
  std::vector<std::size_t> members;

  bool Contains(std::size_t i) const;
  std::string to_string() const;  // e.g. "{1,3}"
  friend bool operator==(const CutType&, const CutType&) = default;
  friend auto operator<=>(const CutType& a, const CutType& b) {
    if (a.members.size() != b.members.size()) return a.members.size() <=> b.members.size();
    return a.members <=> b.members;
  }
};

CutType ComputeCutType(const Scheme& scheme, std::span<const FieldScalar> xi);

/// For each Gamma generator g_k, the rational coordinates of (l_i(g_k))_{i in forms}.
std::vector<RationalVector> FormImagesOfGamma(const Scheme& scheme,
                                              std::span<const std::size_t> forms);

struct PointType {
  std::vector<Sign> signs;  // kPlus, kMinus or kInfinity
  Cone cone;
  FieldVector witness;

  CutType domain() const;
  std::string to_string() const;  // e.g. "+-**"
  friend bool operator==(const PointType& a, const PointType& b) { return a.signs == b.signs; }
};

enum class Effectiveness { kEffective, kIneffective, kUnsupported };
const char* ToString(Effectiveness e);

struct TransformationType {
  std::vector<Sign> signs;  // kPlus, kMinus or kZero
  Cone cone;
  FieldVector witness;
  Effectiveness effectiveness = Effectiveness::kUnsupported;
  std::size_t cone_dimension = 0;
  /// Generators of Gamma cap span(C) (as p2 images), when computed.
  std::vector<FieldVector> span_lattice;

  bool effective() const { return effectiveness == Effectiveness::kEffective; }
  CutType domain() const;
  std::vector<std::size_t> zero_set() const;
  std::string to_string() const;  // e.g. "0-++"
  friend bool operator==(const TransformationType& a, const TransformationType& b) {
    return a.signs == b.signs;
  }
};

/// Cone of a sign vector: + -> l_i > 0, - -> l_i < 0, 0 -> l_i = 0,
/// inf -> no constraint.
Cone SignCone(const Scheme& scheme, std::span<const Sign> signs);

PointType MakePointType(const Scheme& scheme, std::vector<Sign> signs);  // InvariantError if empty
/// Text forms like "+-**" (also "∞") and "0-++"; InputError when malformed
/// or when the cone is empty.
PointType ParsePointType(const Scheme& scheme, std::string_view text);
TransformationType ParseTransformationType(const Scheme& scheme, std::string_view text);

/// Every sign vector in {+,-,inf}^I with a nonempty cone, in enumeration order.
std::vector<PointType> EnumerateAllPointTypes(const Scheme& scheme);

/// Point types whose domain is one of the given cut types.
std::vector<PointType> EnumeratePointTypes(const Scheme& scheme,
                                           const std::set<CutType>& realized_cut_types);

/// Every sign vector in {+,-,0}^I with a nonempty cone, with effectiveness.
std::vector<TransformationType> EnumerateTransformationTypes(const Scheme& scheme);

/// Effectiveness of one transformation type (minimal-complexity test).
void ClassifyEffectiveness(const Scheme& scheme, TransformationType& type);

struct CutTypeCensus {
  std::set<CutType> realized;
  std::size_t samples = 0;
  /// A sample representative for each realized cut type.
  std::vector<std::pair<CutType, FieldVector>> representatives;
};

/// Realized cut types among (1/q) p2(z), q in {1,2,3}, |z|_inf <= bound, plus
/// generic points. A census, not a completeness proof.
CutTypeCensus ComputeCutTypeCensus(const Scheme& scheme, long bound = 2);

/// Everything above for one scheme.
struct Arrangement {
  CutTypeCensus census;
  std::vector<PointType> point_types;        // restricted to realized domains
  std::size_t all_sign_vectors = 0;          // unrestricted feasible count
  std::vector<TransformationType> transformation_types;
  bool minimal_complexity = true;            // every type effective

  const PointType* FindPointType(std::span<const Sign> signs) const;
  const TransformationType* FindTransformationType(std::span<const Sign> signs) const;
  std::vector<const PointType*> PointTypesWithDomain(const CutType& domain) const;
};

Arrangement AnalyzeArrangement(const Scheme& scheme);

}  // namespace meyerion
