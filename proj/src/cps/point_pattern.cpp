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

#include "meyerion/point_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meyerion/errors.hpp"
#include "meyerion/rational.hpp"

namespace meyerion {

namespace {

constexpr double kSlack = 1e-7;
constexpr long kCellBias = 1L << 20;

bool StructuralLess(const FieldVector& a, const FieldVector& b) {
  return StructuralCompare(a, b) < 0;
}

}  // namespace

bool SquaredAtMost(const FieldScalar& squared, const FieldScalar& r_squared) {
  const double a = squared.to_double();
  const double b = r_squared.to_double();
  const double tol = kSlack * (1.0 + std::abs(b));
  if (a < b - tol) return true;
  if (a > b + tol) return false;
  return Compare(squared, r_squared) <= 0;
}

bool WithinDistance(std::span<const FieldScalar> x, std::span<const FieldScalar> y,
                    const FieldScalar& r) {
  return SquaredAtMost(SquaredNorm(Subtract(x, y)), r * r);
}

PointPattern::PointPattern(std::vector<FieldVector> points, FieldVector center,
                           FieldScalar radius, Provenance provenance)
    : points_(std::move(points)),
      center_(std::move(center)),
      radius_(std::move(radius)),
      provenance_(std::move(provenance)) {
  if (radius_.sign() < 0) throw InvariantError("pattern radius must be nonnegative");
  if (center_.size() > 3) throw UnsupportedError("point patterns support dimension <= 3");
  std::sort(points_.begin(), points_.end(), StructuralLess);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != center_.size()) throw InvariantError("pattern: mixed dimensions");
    if (i > 0 && points_[i] == points_[i - 1]) throw InvariantError("pattern: duplicate point");
    if (!WithinDistance(points_[i], center_, radius_)) {
      throw InvariantError("pattern: point " + ToString(points_[i]) + " outside its ball");
    }
  }
  BuildIndex();
}

void PointPattern::BuildIndex() {
  approx_.clear();
  keys_.clear();
  grid_.clear();
  mpz_class scale = 1;
  for (const auto& p : points_) {
    for (const auto& x : p) {
      scale = Lcm(scale, x.rational_part().get_den());
      scale = Lcm(scale, x.radical_part().get_den());
      if (x.discriminant() != 0) key_discriminant_ = x.discriminant();
    }
  }
  key_scale_ = scale;
  const mpz_class limit = mpz_class(1) << 60;
  std::vector<long> cell(dim());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    approx_.push_back(ToDoubles(points_[i]));
    std::vector<std::int64_t> key;
    for (const auto& x : points_[i]) {
      for (const mpq_class* part : {&x.rational_part(), &x.radical_part()}) {
        const mpz_class v = part->get_num() * (scale / part->get_den());
        if (abs(v) >= limit) throw UnsupportedError("pattern coordinates too large for keys");
        key.push_back(v.get_si());
      }
    }
    keys_.push_back(std::move(key));
    for (std::size_t j = 0; j < dim(); ++j) {
      cell[j] = static_cast<long>(std::floor(approx_[i][j] / cell_size_));
    }
    grid_[CellKey(cell)].push_back(i);
  }
}

std::int64_t PointPattern::CellKey(std::span<const long> cell) const {
  std::int64_t key = 0;
  for (long c : cell) {
    const long biased = c + kCellBias;
    if (biased < 0 || biased >= 2 * kCellBias) throw UnsupportedError("pattern extent too large");
    key = key * (2 * kCellBias) + biased;
  }
  return key;
}

std::size_t PointPattern::Find(std::span<const FieldScalar> p) const {
  const FieldVector v(p.begin(), p.end());
  const auto it = std::lower_bound(points_.begin(), points_.end(), v, StructuralLess);
  if (it != points_.end() && *it == v) return static_cast<std::size_t>(it - points_.begin());
  return points_.size();
}

bool PointPattern::Contains(std::span<const FieldScalar> p) const { return Find(p) < size(); }

std::vector<std::size_t> PointPattern::CandidatesNear(std::span<const double> c, double r) const {
  std::vector<std::size_t> out;
  if (points_.empty()) return out;
  const std::size_t n = dim();
  std::vector<long> lo(n), hi(n), cell(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = static_cast<long>(std::floor((c[j] - r - kSlack) / cell_size_));
    hi[j] = static_cast<long>(std::floor((c[j] + r + kSlack) / cell_size_));
  }
  const double r2 = (r + kSlack) * (r + kSlack);
  cell = lo;
  while (true) {
    if (const auto it = grid_.find(CellKey(cell)); it != grid_.end()) {
      for (std::size_t i : it->second) {
        double d2 = 0;
        for (std::size_t j = 0; j < n; ++j) d2 += (approx_[i][j] - c[j]) * (approx_[i][j] - c[j]);
        if (d2 <= r2 * (1 + 1e-12)) out.push_back(i);
      }
    }
    std::size_t j = 0;
    while (j < n && cell[j] == hi[j]) cell[j] = lo[j], ++j;
    if (j == n) break;
    ++cell[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> PointPattern::InBall(std::span<const FieldScalar> c,
                                              const FieldScalar& r) const {
  std::vector<std::size_t> out;
  const FieldScalar r2 = r * r;
  const auto cd = ToDoubles(c);
  for (std::size_t i : CandidatesNear(cd, r.to_double())) {
    if (SquaredAtMost(SquaredNorm(Subtract(points_[i], c)), r2)) out.push_back(i);
  }
  return out;
}

bool PointPattern::Covers(std::span<const FieldScalar> c, const FieldScalar& r) const {
  const FieldScalar slack = radius_ - r;
  if (slack.sign() < 0) return false;
  return SquaredAtMost(SquaredNorm(Subtract(c, center_)), slack * slack);
}

PointPattern PointPattern::Translated(std::span<const FieldScalar> t) const {
  std::vector<FieldVector> moved;
  moved.reserve(points_.size());
  for (const auto& p : points_) moved.push_back(Add(p, t));
  Provenance provenance = provenance_;
  provenance.policy += " translated by (" + ToString(t) + ")";
  return PointPattern(std::move(moved), Add(center_, t), radius_, std::move(provenance));
}

std::size_t SymmetricDifferenceCount(const PointPattern& a, const PointPattern& b,
                                     const FieldScalar& r) {
  const FieldVector origin(a.dim());
  std::size_t count = 0;
  for (const auto* pair : {&a, &b}) {
    const PointPattern& self = *pair;
    const PointPattern& other = pair == &a ? b : a;
    for (std::size_t i : self.InBall(origin, r)) {
      if (!other.Contains(self.point(i))) ++count;
    }
  }
  return count;
}

}  // namespace meyerion
