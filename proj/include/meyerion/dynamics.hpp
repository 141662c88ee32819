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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meyerion/arrangement.hpp"
#include "meyerion/model_set.hpp"
#include "meyerion/point_pattern.hpp"
#include "meyerion/scheme.hpp"

namespace meyerion {

/// B_R[p - c]: the points of p within R of c, moved so that c sits at 0.
/// ReliabilityError when p is not complete on B_R(c).
PointPattern BallPatch(const PointPattern& p, std::span<const FieldScalar> c, const FieldScalar& r);

/// B_r[a - ta] = B_r[b - tb], exact. Both patterns must cover the balls.
bool PatchesEqual(const PointPattern& a, std::span<const FieldScalar> ta, const PointPattern& b,
                  std::span<const FieldScalar> tb, const FieldScalar& r);

struct MetricBound {
  mpq_class value = 1;  // eps / (eps + 1), or 1 when no candidate matched
  mpq_class epsilon = 0;
  FieldVector t, t_prime;
  bool found = false;
  std::size_t candidates = 0;
};

/// Least eps/(eps+1) over eps in step*Z, t, t' in step*Z^N cap B_eps with
/// B_{1/eps}[a - t] = B_{1/eps}[b - t']. Values of eps whose patches are not
/// covered by both patterns are skipped; eps ranges up to max_epsilon.
MetricBound HullMetricUpper(const PointPattern& a, const PointPattern& b, const mpq_class& step,
                            const mpq_class& max_epsilon = 1);

/// Candidate translates: 0, the points of a in the box |t|_inf <= half_width, then
/// the mid-points of the grid step*Z^N in the box, nearest to 0 first.
std::vector<FieldVector> WitnessCandidates(const PointPattern& a, const mpq_class& half_width,
                                           const mpq_class& step);

/// Some t with B_R[a - t] = B_R[b - t]; ReliabilityError when either pattern
/// does not cover the box enlarged by R.
std::optional<FieldVector> StrongProximalWitness(const PointPattern& a, const PointPattern& b,
                                                 const FieldScalar& r, const mpq_class& half_width,
                                                 const mpq_class& step = mpq_class(1, 4));

struct DensityEstimate {
  std::vector<FieldScalar> radii;
  std::vector<std::size_t> counts;  // |(a sym-diff b) cap B_R(0)|
  std::vector<double> densities;    // counts / vol(B_R)
  std::string Csv() const;
};

double BallVolume(std::size_t dim, double r);

DensityEstimate StatisticalCoincidence(const PointPattern& a, const PointPattern& b,
                                       std::span<const FieldScalar> radii);

// ---------------------------------------------------------------------------
// Fibers over the torus.

struct FiberElement {
  PointType type;
  GenerationPolicy policy;  // cone limit along the point-type witness
};

struct FiberSet {
  FieldVector xi;  // torus-reduced
  CutType cut;
  std::vector<FiberElement> elements;

  std::vector<PointPattern> Patterns(const Scheme& scheme, const FieldScalar& radius) const;
};

/// One element per point type with dom p = I(xi). UnsupportedError when the
/// arrangement is not of minimal complexity.
FiberSet FiberElements(const Scheme& scheme, const Arrangement& arrangement,
                       std::span<const FieldScalar> xi,
                       BoundaryConvention convention = DefaultBoundaryConvention());

/// Number of distinct sets among the given patterns restricted to B_R(c).
std::size_t DistinctPatchCount(std::span<const PointPattern> patterns,
                               std::span<const FieldScalar> c, const FieldScalar& r);

/// n^R(xi): distinct R-patches at 0 over the fiber.
std::size_t CountPatchesAtZero(const Scheme& scheme, const Arrangement& arrangement,
                               std::span<const FieldScalar> xi, const FieldScalar& r);

/// Deterministic rational translates, uniform on the box |t|_inf <= side/2
/// with denominator `resolution`.
std::vector<FieldVector> SampleTranslates(std::size_t dim, const mpq_class& side, std::size_t count,
                                          std::uint64_t seed, long resolution = 64);

struct CoincidenceRank {
  std::size_t estimate = 0;  // upper bound: more samples can only lower it
  std::vector<std::size_t> clique;
  // Per coincident pair (i < j): the first sampled translate where the
  // R-patches agree.
  struct Witness {
    std::size_t i, j;
    FieldVector t;
  };
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::size_t, std::size_t>> non_coincident;
  std::size_t samples = 0;
};

CoincidenceRank EstimateCoincidenceRank(std::span<const PointPattern> patterns,
                                        const FieldScalar& r,
                                        std::span<const FieldVector> translates);

struct SingleClassFraction {
  std::size_t samples = 0;
  std::size_t single = 0;  // translates where every fiber R-patch agrees
  double fraction() const { return samples == 0 ? 0.0 : double(single) / double(samples); }
};

SingleClassFraction SinglePatchFraction(std::span<const PointPattern> patterns,
                                        const FieldScalar& r,
                                        std::span<const FieldVector> translates);

/// Radius to generate so that B_R(t) is covered for every t in the box
/// |t|_inf <= side/2 (rounded up to a rational).
FieldScalar CoverageRadius(std::size_t dim, const mpq_class& side, const FieldScalar& r);

// ---------------------------------------------------------------------------
// Boundary-convention validation against the shifted-window limit.

struct ConventionCheck {
  BoundaryConvention initial;
  BoundaryConvention final;
  bool flipped = false;
  bool oracle_stable = true;      // the shifted windows agree for all k
  std::size_t compared = 0;       // (xi, point type) pairs
  std::size_t initial_mismatches = 0;
  std::size_t final_mismatches = 0;
  bool ok() const { return oracle_stable && final_mismatches == 0; }
};

/// The exact pattern of y + eps c + W (closed) on B_R for eps = 1/2^k.
PointPattern ShiftedWindowPattern(const Scheme& scheme, std::span<const FieldScalar> y,
                                  std::span<const FieldScalar> c, unsigned k,
                                  const FieldScalar& radius);

/// Compares every cone-limit fiber pattern over the given torus points with
/// the oracle for k in ks (the last is the reference); flips the convention
/// once on mismatch and re-validates.
ConventionCheck ValidateBoundaryConvention(const Scheme& scheme, const Arrangement& arrangement,
                                           std::span<const FieldVector> xis,
                                           BoundaryConvention start, const FieldScalar& radius,
                                           std::span<const unsigned> ks);

}  // namespace meyerion
