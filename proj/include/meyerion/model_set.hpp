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
#include <span>
#include <string>
#include <vector>

#include "meyerion/field_scalar.hpp"
#include "meyerion/lattice.hpp"
#include "meyerion/point_pattern.hpp"
#include "meyerion/scheme.hpp"

namespace meyerion {

enum class WindowPolicy { kOpen, kClosed, kConeLimit };

/// Which boundary points a cone-limit window keeps: a point on a face with
/// outward normal n is kept iff sign<n, c> matches, for the cone direction c.
enum class BoundaryConvention {
  kOutwardPositive,  // <n, c> > 0
  kOutwardNegative,  // <n, c> < 0
};

/// The convention that reproduces the limit lim_{eps -> 0+} of y + eps c + W.
BoundaryConvention DefaultBoundaryConvention();
BoundaryConvention Flipped(BoundaryConvention convention);
const char* ToString(BoundaryConvention convention);

struct GenerationPolicy {
  WindowPolicy window = WindowPolicy::kClosed;
  FieldVector cone_direction;
  BoundaryConvention convention = DefaultBoundaryConvention();

  static GenerationPolicy Open() { return {WindowPolicy::kOpen, {}, DefaultBoundaryConvention()}; }
  static GenerationPolicy Closed() {
    return {WindowPolicy::kClosed, {}, DefaultBoundaryConvention()};
  }
  static GenerationPolicy ConeLimit(FieldVector direction,
                                    BoundaryConvention convention = DefaultBoundaryConvention()) {
    return {WindowPolicy::kConeLimit, std::move(direction), convention};
  }
  std::string to_string() const;
};

/// Does h lie in the window W under the policy (h is relative to the shift).
bool InWindow(const Scheme& scheme, std::span<const FieldScalar> h, const GenerationPolicy& policy);

/// Vertices of the window polytope (exact, deterministic order).
std::vector<FieldVector> WindowVertices(const Scheme& scheme);

struct LatticePoint {
  IntVector z;
  FieldVector physical;
  FieldVector internal;
};

/// All z with |p1 z|^2 <= R^2 and p2 z in shift + W*, in lexicographic order
/// of z.
std::vector<LatticePoint> EnumerateModelSet(const Scheme& scheme,
                                            std::span<const FieldScalar> shift,
                                            const FieldScalar& radius,
                                            const GenerationPolicy& policy);

/// The model set restricted to the closed ball B_R(0).
PointPattern GenerateModelSet(const Scheme& scheme, std::span<const FieldScalar> shift,
                              const FieldScalar& radius, const GenerationPolicy& policy);

// ---------------------------------------------------------------------------
// Delone and Meyer sanity checks.

/// Minimum squared distance between distinct points (exact); zero when the
/// pattern has fewer than two points.
FieldScalar MinimumSquaredDistance(const PointPattern& pattern);

struct CoveringCheck {
  bool passed = true;
  std::size_t grid_points = 0;
  FieldVector first_failure;
};

/// Every point of the grid step * Z^N inside B_{R - covering}(center) lies
/// within `covering` of a pattern point.
CoveringCheck CheckCovering(const PointPattern& pattern, const FieldScalar& covering,
                            const mpq_class& step);

/// Number of translation classes of the patches B_r(p) - p over pattern
/// points p whose patch lies inside the completeness ball.
std::size_t PatchClassCount(const PointPattern& pattern, const FieldScalar& r);

struct MeyerWitness {
  std::vector<FieldVector> f;  // (P - P - P) inside B_K, canonical order
  bool inclusion_holds = true;
  std::size_t checked_differences = 0;
  FieldVector first_failure;
  std::vector<std::string> warnings;
};

/// F = (P - P - P) cap B_K(0) and the check (P - P) cap B_{R-K} within P + F.
MeyerWitness ComputeMeyerWitness(const PointPattern& pattern, const FieldScalar& k_radius);

}  // namespace meyerion
