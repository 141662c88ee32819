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
#include <unordered_map>
#include <vector>

#include "meyerion/field_scalar.hpp"

namespace meyerion {

/// Where a pattern came from; echoed in reports.
struct Provenance {
  std::string scheme;
  std::string shift;
  std::string policy;
};

/// A finite exact point set in R^N, known to be complete inside the closed
/// ball B_radius(center). Points are kept in canonical (structural
/// lexicographic) order without duplicates.
class PointPattern {
 public:
  PointPattern() = default;
  /// Throws InvariantError on duplicates, mixed dimensions or points outside
  /// the ball.
  PointPattern(std::vector<FieldVector> points, FieldVector center, FieldScalar radius,
               Provenance provenance = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dim() const { return center_.size(); }
  const std::vector<FieldVector>& points() const { return points_; }
  const FieldVector& point(std::size_t i) const { return points_[i]; }
  const std::vector<double>& approx(std::size_t i) const { return approx_[i]; }
  const FieldVector& center() const { return center_; }
  const FieldScalar& radius() const { return radius_; }
  const Provenance& provenance() const { return provenance_; }

  bool Contains(std::span<const FieldScalar> p) const;
  /// Index of p, or size() when absent.
  std::size_t Find(std::span<const FieldScalar> p) const;

  /// Indices (ascending) of the points q with |q - c|^2 <= r^2, exact.
  std::vector<std::size_t> InBall(std::span<const FieldScalar> c, const FieldScalar& r) const;

  /// Indices of points whose floating-point position may lie within r of c
  /// (superset of the exact answer up to rounding).
  std::vector<std::size_t> CandidatesNear(std::span<const double> c, double r) const;

  /// True when B_r(c) lies inside the ball where this pattern is complete.
  bool Covers(std::span<const FieldScalar> c, const FieldScalar& r) const;

  /// The pattern moved by t (points and completeness ball).
  PointPattern Translated(std::span<const FieldScalar> t) const;

  /// Integer coordinates of point i: rational and radical parts of every
  /// component multiplied by key_scale(), interleaved.
  const std::vector<std::int64_t>& key(std::size_t i) const { return keys_[i]; }
  const mpz_class& key_scale() const { return key_scale_; }
  std::int64_t key_discriminant() const { return key_discriminant_; }

  /// Set equality of the points (completeness balls are ignored).
  bool SamePoints(const PointPattern& other) const { return points_ == other.points_; }

 private:
  void BuildIndex();
  std::int64_t CellKey(std::span<const long> cell) const;

  std::vector<FieldVector> points_;
  std::vector<std::vector<double>> approx_;
  FieldVector center_;
  FieldScalar radius_;
  Provenance provenance_;
  std::vector<std::vector<std::int64_t>> keys_;
  mpz_class key_scale_ = 1;
  std::int64_t key_discriminant_ = 0;
  double cell_size_ = 1.0;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> grid_;
};

/// Points of a and b that are not in both (exact), restricted to B_r(0).
std::size_t SymmetricDifferenceCount(const PointPattern& a, const PointPattern& b,
                                     const FieldScalar& r);

/// Exact |x - y|^2 <= r^2 test.
bool WithinDistance(std::span<const FieldScalar> x, std::span<const FieldScalar> y,
                    const FieldScalar& r);

/// x^2 <= r^2 test for a squared distance value, with a floating-point
/// shortcut when the decision is clear.
bool SquaredAtMost(const FieldScalar& squared, const FieldScalar& r_squared);

}  // namespace meyerion
