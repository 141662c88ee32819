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

#include "meyerion/arrangement.hpp"

#include <algorithm>
#include <functional>

#include "meyerion/errors.hpp"

namespace meyerion {

char SignChar(Sign sign) {
  switch (sign) {
    case Sign::kPlus:
      return '+';
    case Sign::kMinus:
      return '-';
    case Sign::kZero:
      return '0';
    case Sign::kInfinity:
      return '*';
  }
  return '?';
}

Sign ParseSign(char c) {
  switch (c) {
    case '+':
      return Sign::kPlus;
    case '-':
      return Sign::kMinus;
    case '0':
      return Sign::kZero;
    case '*':
      return Sign::kInfinity;
    default:
      throw InputError(std::string("unknown sign '") + c + "'");
  }
}

// ---------------------------------------------------------------------------
// Cones

bool Cone::Contains(std::span<const FieldScalar> x) const {
  for (const auto& c : constraints) {
    if (!c.SatisfiedBy(x)) return false;
  }
  return true;
}

Cone Cone::Closure() const {
  Cone out = *this;
  for (auto& c : out.constraints) {
    if (c.relation == Relation::kPositive) c.relation = Relation::kNonNegative;
  }
  return out;
}

bool Cone::Feasible() const { return FmFeasible(constraints, dim).feasible; }

std::size_t Cone::SpanDimension() const {
  FieldMatrix equalities;
  for (const auto& c : constraints) {
    if (c.relation == Relation::kEqual) equalities.push_back(c.coefficients);
  }
  return dim - (equalities.empty() ? 0 : Rank(equalities));
}

Cone TangentCone(const Cone& cone, std::span<const FieldScalar> x) {
  if (x.size() != cone.dim) throw InputError("tangent cone: dimension mismatch");
  const Cone closed = cone.Closure();
  if (!closed.Contains(x)) throw InputError("tangent cone: point outside the closure");
  Cone out{cone.dim, {}};
  for (const auto& c : closed.constraints) {
    if (c.relation == Relation::kEqual) {
      out.constraints.push_back({c.coefficients, FieldScalar(0), Relation::kEqual});
    } else if (c.Evaluate(x).is_zero()) {
      out.constraints.push_back({c.coefficients, FieldScalar(0), Relation::kNonNegative});
    }
  }
  return out;
}

bool ConeContains(const Cone& outer, const Cone& inner) {
  if (outer.dim != inner.dim) throw InputError("cone_contains: dimension mismatch");
  auto violated = [&](LinearForm negation) {
    std::vector<LinearForm> system = inner.constraints;
    system.push_back(std::move(negation));
    return FmFeasible(system, inner.dim).feasible;
  };
  for (const auto& c : outer.constraints) {
    const FieldVector neg = Scale(FieldScalar(-1), c.coefficients);
    const FieldScalar neg_const = -c.constant;
    switch (c.relation) {
      case Relation::kNonNegative:
        if (violated({neg, neg_const, Relation::kPositive})) return false;
        break;
      case Relation::kPositive:
        if (violated({neg, neg_const, Relation::kNonNegative})) return false;
        break;
      case Relation::kEqual:
        if (violated({c.coefficients, c.constant, Relation::kPositive})) return false;
        if (violated({neg, neg_const, Relation::kPositive})) return false;
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cut types

bool CutType::Contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::string CutType::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(members[k] + 1);
  }
  return out + "}";
}

std::vector<RationalVector> FormImagesOfGamma(const Scheme& scheme,
                                              std::span<const std::size_t> forms) {
  std::vector<RationalVector> images;
  for (const auto& g : scheme.gamma_generators()) {
    FieldVector values;
    for (std::size_t i : forms) values.push_back(Dot(scheme.hyperplanes()[i].form, g));
    images.push_back(RationalCoordinates(values));
  }
  return images;
}

CutType ComputeCutType(const Scheme& scheme, std::span<const FieldScalar> xi) {
  if (xi.size() != scheme.internal_dim()) throw InputError("cut type: dimension mismatch");
  CutType out;
  for (std::size_t i = 0; i < scheme.hyperplanes().size(); ++i) {
    const auto& h = scheme.hyperplanes()[i];
    const std::size_t index[] = {i};
    const FieldVector value{Dot(h.form, Subtract(xi, h.offset_point))};
    if (HnfMembership(FormImagesOfGamma(scheme, index), RationalCoordinates(value)).member) {
      out.members.push_back(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Types

Cone SignCone(const Scheme& scheme, std::span<const Sign> signs) {
  if (signs.size() != scheme.hyperplanes().size()) throw InputError("sign vector has wrong length");
  Cone cone{scheme.internal_dim(), {}};
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const FieldVector& form = scheme.hyperplanes()[i].form;
    switch (signs[i]) {
      case Sign::kPlus:
        cone.constraints.push_back({form, FieldScalar(0), Relation::kPositive});
        break;
      case Sign::kMinus:
        cone.constraints.push_back({Scale(FieldScalar(-1), form), FieldScalar(0), Relation::kPositive});
        break;
      case Sign::kZero:
        cone.constraints.push_back({form, FieldScalar(0), Relation::kEqual});
        break;
      case Sign::kInfinity:
        break;
    }
  }
  return cone;
}

namespace {

std::string SignString(std::span<const Sign> signs) {
  std::string out;
  for (Sign s : signs) out += SignChar(s);
  return out;
}

CutType DomainOf(std::span<const Sign> signs, Sign free) {
  CutType out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != free) out.members.push_back(i);
  }
  return out;
}

std::vector<Sign> ParseSigns(std::string_view text, std::size_t expected, bool point) {
  std::string s(text);
  for (std::size_t at; (at = s.find("\xe2\x88\x9e")) != std::string::npos;) s.replace(at, 3, "*");
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.size() != expected) {
    throw InputError("sign string '" + std::string(text) + "' should have " +
                     std::to_string(expected) + " signs");
  }
  std::vector<Sign> signs;
  for (char c : s) {
    const Sign sign = ParseSign(c);
    if (point ? sign == Sign::kZero : sign == Sign::kInfinity) {
      throw InputError(std::string("sign '") + c + "' is not allowed in a " +
                       (point ? "point" : "transformation") + " type");
    }
    signs.push_back(sign);
  }
  return signs;
}

// Visits every vector in alphabet^n in lexicographic order.
void ForEachSignVector(std::size_t n, const std::vector<Sign>& alphabet,
                       const std::function<void(const std::vector<Sign>&)>& visit) {
  std::vector<std::size_t> digit(n, 0);
  std::vector<Sign> signs(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) signs[i] = alphabet[digit[i]];
    visit(signs);
    std::size_t k = n;
    while (k > 0 && digit[k - 1] + 1 == alphabet.size()) digit[--k] = 0;
    if (k == 0) return;
    ++digit[k - 1];
  }
}

}  // namespace

CutType PointType::domain() const { return DomainOf(signs, Sign::kInfinity); }
std::string PointType::to_string() const { return SignString(signs); }

CutType TransformationType::domain() const { return DomainOf(signs, Sign::kZero); }

std::vector<std::size_t> TransformationType::zero_set() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == Sign::kZero) out.push_back(i);
  }
  return out;
}

std::string TransformationType::to_string() const { return SignString(signs); }

const char* ToString(Effectiveness e) {
  switch (e) {
    case Effectiveness::kEffective:
      return "effective";
    case Effectiveness::kIneffective:
      return "ineffective";
    case Effectiveness::kUnsupported:
      return "unsupported";
  }
  return "?";
}

PointType MakePointType(const Scheme& scheme, std::vector<Sign> signs) {
  PointType t;
  t.cone = SignCone(scheme, signs);
  t.signs = std::move(signs);
  const Feasibility f = FmFeasible(t.cone.constraints, t.cone.dim);
  if (!f.feasible) throw InvariantError("point type " + t.to_string() + " has an empty cone");
  t.witness = f.witness;
  return t;
}

PointType ParsePointType(const Scheme& scheme, std::string_view text) {
  try {
    return MakePointType(scheme, ParseSigns(text, scheme.hyperplanes().size(), true));
  } catch (const InvariantError& e) {
    throw InputError(e.what());
  }
}

TransformationType ParseTransformationType(const Scheme& scheme, std::string_view text) {
  TransformationType t;
  t.signs = ParseSigns(text, scheme.hyperplanes().size(), false);
  t.cone = SignCone(scheme, t.signs);
  const Feasibility f = FmFeasible(t.cone.constraints, t.cone.dim);
  if (!f.feasible) throw InputError("transformation type " + t.to_string() + " has an empty cone");
  t.witness = f.witness;
  t.cone_dimension = t.cone.SpanDimension();
  ClassifyEffectiveness(scheme, t);
  return t;
}

std::vector<PointType> EnumerateAllPointTypes(const Scheme& scheme) {
  std::vector<PointType> out;
  ForEachSignVector(scheme.hyperplanes().size(), {Sign::kPlus, Sign::kMinus, Sign::kInfinity},
                    [&](const std::vector<Sign>& signs) {
                      PointType t;
                      t.cone = SignCone(scheme, signs);
                      const Feasibility f = FmFeasible(t.cone.constraints, t.cone.dim);
                      if (!f.feasible) return;
                      t.signs = signs;
                      t.witness = f.witness;
                      out.push_back(std::move(t));
                    });
  return out;
}

std::vector<PointType> EnumeratePointTypes(const Scheme& scheme,
                                           const std::set<CutType>& realized_cut_types) {
  std::vector<PointType> out;
  for (auto& t : EnumerateAllPointTypes(scheme)) {
    if (realized_cut_types.count(t.domain())) out.push_back(std::move(t));
  }
  return out;
}

void ClassifyEffectiveness(const Scheme& scheme, TransformationType& type) {
  const std::size_t m = scheme.internal_dim();
  const std::vector<std::size_t> zeros = type.zero_set();
  FieldMatrix forms;
  for (std::size_t i : zeros) forms.push_back(scheme.hyperplanes()[i].form);
  const FieldMatrix span = forms.empty() ? FieldMatrix{} : Kernel(forms);
  const std::size_t dim = forms.empty() ? m : span.size();
  type.cone_dimension = dim;
  type.span_lattice.clear();

  if (dim == 0) {
    type.effectiveness = Effectiveness::kEffective;
    return;
  }
  if (dim == m) {
    const CheckStatus density = ValidateScheme(scheme).StatusOf("p2_dense");
    type.effectiveness =
        density == CheckStatus::kPass ? Effectiveness::kEffective : Effectiveness::kUnsupported;
    type.span_lattice = scheme.gamma_generators();
    return;
  }

  for (const auto& c : IntegerRelations(FormImagesOfGamma(scheme, zeros))) {
    FieldVector g = scheme.Internal(c);
    if (!IsZeroVector(g)) type.span_lattice.push_back(std::move(g));
  }
  if (dim != 1) {
    type.effectiveness = Effectiveness::kUnsupported;
    return;
  }
  // One-dimensional span: dense iff the multiples of a direction have Q-rank >= 2.
  const FieldVector& v = span[0];
  std::size_t j = 0;
  while (v[j].is_zero()) ++j;
  FieldMatrix multiples;
  for (const auto& g : type.span_lattice) {
    FieldVector row;
    for (const auto& q : RationalCoordinates(FieldVector{g[j] / v[j]})) row.emplace_back(q);
    multiples.push_back(std::move(row));
  }
  const bool dense = !multiples.empty() && Rank(multiples) >= 2;
  type.effectiveness = dense ? Effectiveness::kEffective : Effectiveness::kIneffective;
}

std::vector<TransformationType> EnumerateTransformationTypes(const Scheme& scheme) {
  std::vector<TransformationType> out;
  ForEachSignVector(scheme.hyperplanes().size(), {Sign::kPlus, Sign::kMinus, Sign::kZero},
                    [&](const std::vector<Sign>& signs) {
                      TransformationType t;
                      t.cone = SignCone(scheme, signs);
                      const Feasibility f = FmFeasible(t.cone.constraints, t.cone.dim);
                      if (!f.feasible) return;
                      t.signs = signs;
                      t.witness = f.witness;
                      out.push_back(std::move(t));
                    });
  for (auto& t : out) ClassifyEffectiveness(scheme, t);
  return out;
}

CutTypeCensus ComputeCutTypeCensus(const Scheme& scheme, long bound) {
  CutTypeCensus census;
  const std::size_t n = scheme.rank();
  auto record = [&](const FieldVector& h) {
    const FieldVector xi = TorusReduce(scheme, h);
    const CutType c = ComputeCutType(scheme, xi);
    ++census.samples;
    if (census.realized.insert(c).second) census.representatives.emplace_back(c, xi);
  };
  for (long q = 1; q <= 3; ++q) {
    IntVector z(n, mpz_class(-bound));
    while (true) {
      record(Scale(FieldScalar(mpq_class(1, q)), scheme.Internal(z)));
      std::size_t k = 0;
      while (k < n && z[k] == bound) z[k] = -bound, ++k;
      if (k == n) break;
      z[k] += 1;
    }
  }
  // Generic points: coordinates with unrelated rational parts.
  const long primes[] = {3, 5, 7, 11, 13, 17};
  for (std::size_t s = 0; s < 3; ++s) {
    FieldVector h;
    for (std::size_t j = 0; j < scheme.internal_dim(); ++j) {
      h.emplace_back(mpq_class(1, primes[(s + 2 * j) % 6]));
    }
    record(h);
  }
  std::sort(census.representatives.begin(), census.representatives.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return census;
}

const PointType* Arrangement::FindPointType(std::span<const Sign> signs) const {
  for (const auto& t : point_types) {
    if (std::equal(t.signs.begin(), t.signs.end(), signs.begin(), signs.end())) return &t;
  }
  return nullptr;
}

const TransformationType* Arrangement::FindTransformationType(std::span<const Sign> signs) const {
  for (const auto& t : transformation_types) {
    if (std::equal(t.signs.begin(), t.signs.end(), signs.begin(), signs.end())) return &t;
  }
  return nullptr;
}

std::vector<const PointType*> Arrangement::PointTypesWithDomain(const CutType& domain) const {
  std::vector<const PointType*> out;
  for (const auto& t : point_types) {
    if (t.domain() == domain) out.push_back(&t);
  }
  return out;
}

Arrangement AnalyzeArrangement(const Scheme& scheme) {
  Arrangement a;
  a.census = ComputeCutTypeCensus(scheme);
  const auto all = EnumerateAllPointTypes(scheme);
  a.all_sign_vectors = all.size();
  for (const auto& t : all) {
    if (a.census.realized.count(t.domain())) a.point_types.push_back(t);
  }
  a.transformation_types = EnumerateTransformationTypes(scheme);
  for (const auto& t : a.transformation_types) {
    if (!t.effective()) a.minimal_complexity = false;
  }
  return a;
}

}  // namespace meyerion
