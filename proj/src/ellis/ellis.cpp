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

#include "meyerion/ellis.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "meyerion/errors.hpp"

namespace meyerion {

std::string XiPoint::to_string() const { return ToString(xi) + ";" + type.to_string(); }
std::string EllisElement::to_string() const { return ToString(xi) + ";" + type.to_string(); }

XiPoint MakeXiPoint(const Scheme& scheme, std::span<const FieldScalar> xi, PointType type) {
  XiPoint x{TorusReduce(scheme, xi), std::move(type)};
  const CutType cut = ComputeCutType(scheme, x.xi);
  if (!(cut == x.type.domain())) {
    throw InputError("point type " + x.type.to_string() + " has domain " +
                     x.type.domain().to_string() + " but the cut type of xi is " +
                     cut.to_string());
  }
  return x;
}

GroupMembership TorusGroupMembership(const Scheme& scheme, const TransformationType& type,
                                     std::span<const FieldScalar> xi) {
  const std::vector<std::size_t> zeros = type.zero_set();
  if (zeros.empty()) return {true, {}};
  FieldVector values;
  for (std::size_t i : zeros) values.push_back(Dot(scheme.hyperplanes()[i].form, xi));
  const LatticeMembership m =
      HnfMembership(FormImagesOfGamma(scheme, zeros), RationalCoordinates(values));
  return {m.member, m.coefficients};
}

EllisElement MakeEllisElement(const Scheme& scheme, std::span<const FieldScalar> xi,
                              TransformationType type) {
  if (!type.effective()) {
    throw InputError("transformation type " + type.to_string() + " is not effective");
  }
  EllisElement e{TorusReduce(scheme, xi), std::move(type), {}};
  const GroupMembership m = TorusGroupMembership(scheme, e.type, e.xi);
  if (!m.member) {
    throw InputError("xi = (" + ToString(e.xi) + ") is not in the group of type " +
                     e.type.to_string());
  }
  e.certificate = m.coefficients;
  return e;
}

const TransformationType& MonoidProduct(const Arrangement& arrangement, const TransformationType& t,
                                        const TransformationType& u) {
  if (t.signs.size() != u.signs.size()) throw InputError("types of different arrangements");
  std::vector<Sign> signs(t.signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    signs[i] = t.signs[i] != Sign::kZero ? t.signs[i] : u.signs[i];
  }
  const TransformationType* found = arrangement.FindTransformationType(signs);
  if (found == nullptr || !found->effective()) {
    std::string s;
    for (Sign x : signs) s += SignChar(x);
    throw InvariantError("product " + t.to_string() + " * " + u.to_string() + " = " + s +
                         " is not an effective transformation type");
  }
  return *found;
}

EllisElement EllisProduct(const Scheme& scheme, const Arrangement& arrangement,
                          const EllisElement& e, const EllisElement& f) {
  EllisElement out{TorusReduce(scheme, Add(e.xi, f.xi)), MonoidProduct(arrangement, e.type, f.type),
                   {}};
  const GroupMembership m = TorusGroupMembership(scheme, out.type, out.xi);
  if (!m.member) {
    throw InvariantError("product (" + ToString(out.xi) + ") left the group of type " +
                         out.type.to_string());
  }
  out.certificate = m.coefficients;
  return out;
}

XiPoint EllisAction(const Scheme& scheme, const EllisElement& e, const XiPoint& x) {
  const FieldVector xi = TorusReduce(scheme, Add(e.xi, x.xi));
  const CutType cut = ComputeCutType(scheme, xi);
  std::vector<Sign> signs(e.type.signs.size(), Sign::kInfinity);
  for (std::size_t i : cut.members) {
    if (e.type.signs[i] != Sign::kZero) {
      signs[i] = e.type.signs[i];
    } else if (x.type.signs[i] != Sign::kInfinity) {
      signs[i] = x.type.signs[i];
    } else {
      throw InvariantError("action leaves index " + std::to_string(i + 1) + " of " +
                           cut.to_string() + " without a sign");
    }
  }
  PointType type = MakePointType(scheme, std::move(signs));
  if (!(type.domain() == cut)) throw InvariantError("action produced a point type off its cut type");
  return XiPoint{xi, std::move(type)};
}

std::vector<TransformationType> EffectiveTypes(const Arrangement& arrangement) {
  std::vector<TransformationType> out;
  for (const auto& t : arrangement.transformation_types) {
    if (t.effective()) out.push_back(t);
  }
  return out;
}

std::vector<TransformationType> MinimalIdeal(const Arrangement& arrangement) {
  const auto all = EffectiveTypes(arrangement);
  std::vector<TransformationType> ideal;
  for (const auto& t : all) {
    if (t.zero_set().empty()) ideal.push_back(t);
  }
  auto in_ideal = [&](const TransformationType& t) {
    return std::find(ideal.begin(), ideal.end(), t) != ideal.end();
  };
  for (const auto& l : ideal) {
    for (const auto& s : all) {
      if (!in_ideal(MonoidProduct(arrangement, s, l))) {
        throw InvariantError("full-domain types are not a left ideal");
      }
      if (!(MonoidProduct(arrangement, l, s) == l)) {
        throw InvariantError("left domination fails for " + l.to_string());
      }
    }
  }
  // Every principal left ideal T x contains the candidate, so it is the
  // unique minimal one.
  for (const auto& x : all) {
    for (const auto& l : ideal) {
      bool reached = false;
      for (const auto& s : all) reached |= MonoidProduct(arrangement, s, x) == l;
      if (!reached) throw InvariantError("minimal left ideal is not unique");
    }
  }
  return ideal;
}

const char* ToString(Order order) {
  switch (order) {
    case Order::kEqual:
      return "equal";
    case Order::kGreater:
      return ">=";
    case Order::kLess:
      return "<=";
    case Order::kIncomparable:
      return "incomparable";
  }
  return "?";
}

Order IdempotentOrder(const Arrangement& arrangement, const TransformationType& t,
                      const TransformationType& u) {
  if (t == u) return Order::kEqual;
  const auto& tu = MonoidProduct(arrangement, t, u);
  const auto& ut = MonoidProduct(arrangement, u, t);
  const bool alg_ge = tu == u && ut == u;
  const bool alg_le = tu == t && ut == t;
  const bool geo_ge = ConeContains(u.cone.Closure(), t.cone);
  const bool geo_le = ConeContains(t.cone.Closure(), u.cone);
  if (alg_ge != geo_ge || alg_le != geo_le) {
    throw InvariantError("order of " + t.to_string() + " and " + u.to_string() +
                         " disagrees with cone inclusion");
  }
  if (alg_ge) return Order::kGreater;
  if (alg_le) return Order::kLess;
  return Order::kIncomparable;
}

ConvergenceReport CheckConvergence(const Scheme& scheme, std::span<const EllisElement> sequence,
                                   const EllisElement& limit) {
  ConvergenceReport report;
  const Cone& target = limit.type.cone;
  const Cone target_closure = target.Closure();
  const FieldVector origin(scheme.internal_dim());
  for (const auto& e : sequence) {
    ConvergenceStep step;
    step.lifted_difference = TorusLiftNearZero(scheme, Subtract(e.xi, limit.xi));
    step.in_cone = target.Contains(step.lifted_difference);
    if (target_closure.Contains(step.lifted_difference)) {
      const Cone inner = TangentCone(e.type.cone.Closure(), origin);
      const Cone outer = TangentCone(target_closure, step.lifted_difference);
      step.tangent_inclusion = ConeContains(outer, inner);
    }
    report.steps.push_back(std::move(step));
  }
  std::size_t tail = 0;
  while (tail < report.steps.size()) {
    const auto& s = report.steps[report.steps.size() - 1 - tail];
    if (!(s.in_cone && s.tangent_inclusion)) break;
    ++tail;
  }
  report.threshold = report.steps.size() - tail;
  report.verdict = tail >= 3 ? ConvergenceVerdict::kConverges : ConvergenceVerdict::kInconclusive;
  report.note =
      "differences are lifted to Delta-coordinates in [-1/2, 1/2); a finite sequence can only "
      "support convergence, never prove it";
  return report;
}

namespace {

std::string ZeroSetText(const TransformationType& t) {
  std::string out;
  for (std::size_t i : t.zero_set()) {
    if (!out.empty()) out += " cap ";
    out += "H_" + std::to_string(i + 1) + "^0";
  }
  return out;
}

}  // namespace

StructureReport BuildStructureReport(const Scheme& scheme, const Arrangement& arrangement) {
  StructureReport report;
  const auto types = EffectiveTypes(arrangement);
  const std::size_t m = scheme.internal_dim();
  const std::string n = std::to_string(scheme.physical_dim());
  for (const auto& t : types) {
    TypeGroup g{t, t.cone_dimension, "", ""};
    if (t.cone_dimension == 0) {
      g.reduced_group = "Gamma/Delta = Z^" + n;
      g.suspended_group = "R^" + n;
    } else if (t.cone_dimension == m) {
      g.reduced_group = "T_perp";
      g.suspended_group = "T";
    } else {
      g.reduced_group = "(" + ZeroSetText(t) + " + Gamma)/Delta";
      g.suspended_group = "(R^" + n + " x " + ZeroSetText(t) + " + L)/L";
    }
    report.groups.push_back(std::move(g));
  }
  auto index_of = [&](const TransformationType& t) {
    return static_cast<std::size_t>(std::find(types.begin(), types.end(), t) - types.begin());
  };
  report.cayley.assign(types.size(), std::vector<std::size_t>(types.size()));
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = 0; j < types.size(); ++j) {
      report.cayley[i][j] = index_of(MonoidProduct(arrangement, types[i], types[j]));
    }
  }
  for (const auto& t : MinimalIdeal(arrangement)) report.minimal_ideal.push_back(index_of(t));
  std::vector<std::vector<bool>> greater(types.size(), std::vector<bool>(types.size(), false));
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = 0; j < types.size(); ++j) {
      greater[i][j] = IdempotentOrder(arrangement, types[i], types[j]) == Order::kGreater;
    }
  }
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (!greater[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < types.size() && cover; ++k) {
        if (greater[i][k] && greater[k][j]) cover = false;
      }
      if (cover) report.hasse.emplace_back(i, j);
    }
  }
  return report;
}

std::string StructureReport::CayleyCsv() const {
  std::ostringstream out;
  out << "row,column,product\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = 0; j < groups.size(); ++j) {
      out << groups[i].type.to_string() << ',' << groups[j].type.to_string() << ','
          << groups[cayley[i][j]].type.to_string() << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

FieldVector LatticeSample(const Scheme& scheme, std::mt19937_64& rng, long q) {
  std::uniform_int_distribution<long> coord(-3, 3);
  IntVector z(scheme.rank());
  for (auto& c : z) c = coord(rng);
  return Scale(FieldScalar(mpq_class(1, q)), scheme.Internal(z));
}

}  // namespace

std::vector<XiPoint> SampleXiPoints(const Scheme& scheme, const Arrangement& arrangement,
                                    std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> denominator(1, 3);
  std::vector<XiPoint> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    const FieldVector xi = TorusReduce(scheme, LatticeSample(scheme, rng, denominator(rng)));
    const auto types = arrangement.PointTypesWithDomain(ComputeCutType(scheme, xi));
    if (types.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    out.push_back(XiPoint{xi, *types[pick(rng)]});
  }
  return out;
}

std::vector<EllisElement> SampleEllisElements(const Scheme& scheme, const Arrangement& arrangement,
                                              std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto types = EffectiveTypes(arrangement);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<long> denominator(1, 3);
  std::uniform_int_distribution<long> step(-6, 6);
  std::vector<EllisElement> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    const TransformationType& t = types[pick(rng)];
    FieldVector xi = LatticeSample(scheme, rng, denominator(rng));
    if (t.cone_dimension > 0) {
      xi = Add(xi, Scale(FieldScalar(mpq_class(step(rng), 7)), t.witness));
    }
    if (!TorusGroupMembership(scheme, t, xi).member) continue;
    out.push_back(MakeEllisElement(scheme, xi, t));
  }
  return out;
}

}  // namespace meyerion
