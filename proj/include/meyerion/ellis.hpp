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

#include "meyerion/arrangement.hpp"
#include "meyerion/scheme.hpp"

namespace meyerion {

/// A point (xi, p) of the transversal Xi: dom p equals the cut type of xi.
struct XiPoint {
  FieldVector xi;  // torus-reduced
  PointType type;

  std::string to_string() const;  // "<xi>;<signs>"
};

/// Reduces xi and checks dom p = I(xi); InputError otherwise.
XiPoint MakeXiPoint(const Scheme& scheme, std::span<const FieldScalar> xi, PointType type);

struct GroupMembership {
  bool member = false;
  /// Integer coefficients c with l_i(xi) = sum_k c_k l_i(g_k) for every i in
  /// the zero set of the type (empty when the condition is vacuous).
  IntVector coefficients;
};

/// Decides xi in T_t = (span C_t + Gamma)/Delta for an effective type.
GroupMembership TorusGroupMembership(const Scheme& scheme, const TransformationType& type,
                                     std::span<const FieldScalar> xi);

/// An element (xi, t) of E(Xi, Z^N) with its membership certificate.
struct EllisElement {
  FieldVector xi;  // torus-reduced
  TransformationType type;
  IntVector certificate;

  std::string to_string() const;  // "<xi>;<signs>"
};

/// InputError when t is not effective or xi is not in T_t.
EllisElement MakeEllisElement(const Scheme& scheme, std::span<const FieldScalar> xi,
                              TransformationType type);

/// (t t')(i) = t(i) if t(i) != 0, else t'(i). InvariantError when the
/// product is not an enumerated effective type.
const TransformationType& MonoidProduct(const Arrangement& arrangement, const TransformationType& t,
                                        const TransformationType& u);

/// (xi, t)(xi', t') = (xi + xi', t t'); certificate recomputed.
EllisElement EllisProduct(const Scheme& scheme, const Arrangement& arrangement,
                          const EllisElement& e, const EllisElement& f);

/// (xi, t) . (xi', p) = (xi + xi', p') with p' from the action formula.
XiPoint EllisAction(const Scheme& scheme, const EllisElement& e, const XiPoint& x);

/// Effective transformation types of the arrangement, in enumeration order.
std::vector<TransformationType> EffectiveTypes(const Arrangement& arrangement);

/// The full-domain types; InvariantError if they fail to form the unique
/// minimal left ideal (checked exhaustively).
std::vector<TransformationType> MinimalIdeal(const Arrangement& arrangement);

enum class Order { kEqual, kGreater, kLess, kIncomparable };
const char* ToString(Order order);

/// t >= u iff t u = u t = u; cross-checked against C_t within closure(C_u).
Order IdempotentOrder(const Arrangement& arrangement, const TransformationType& t,
                      const TransformationType& u);

struct ConvergenceStep {
  FieldVector lifted_difference;  // xi_n - xi lifted near 0
  bool in_cone = false;           // lifted difference in C_t
  bool tangent_inclusion = false; // T_{cl C_{t_n}}(0) within T_{cl C_t}(difference)
};

enum class ConvergenceVerdict { kConverges, kInconclusive };

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  ConvergenceVerdict verdict = ConvergenceVerdict::kInconclusive;
  std::size_t threshold = 0;  // first index of the compliant tail
  std::string note;
};

ConvergenceReport CheckConvergence(const Scheme& scheme, std::span<const EllisElement> sequence,
                                   const EllisElement& limit);

struct TypeGroup {
  TransformationType type;
  std::size_t span_dimension = 0;
  std::string reduced_group;    // description of T_t
  std::string suspended_group;  // description of the continuous T_t
};

struct StructureReport {
  std::vector<TypeGroup> groups;
  std::vector<std::vector<std::size_t>> cayley;  // indices into groups
  std::vector<std::size_t> minimal_ideal;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (upper, lower) covers
  std::string CayleyCsv() const;
};

StructureReport BuildStructureReport(const Scheme& scheme, const Arrangement& arrangement);

// ---------------------------------------------------------------------------
// Deterministic samples of exact elements, for property checks.

std::vector<XiPoint> SampleXiPoints(const Scheme& scheme, const Arrangement& arrangement,
                                    std::size_t count, std::uint64_t seed);
std::vector<EllisElement> SampleEllisElements(const Scheme& scheme, const Arrangement& arrangement,
                                              std::size_t count, std::uint64_t seed);

}  // namespace meyerion
