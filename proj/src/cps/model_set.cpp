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

#include "meyerion/model_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_set>

#include "meyerion/errors.hpp"

namespace meyerion {

namespace {

constexpr double kMargin = 1e-6;

int ConventionSign(BoundaryConvention convention) {
  return convention == BoundaryConvention::kOutwardPositive ? 1 : -1;
}

struct FaceData {
  std::vector<double> normal;
  double offset;
};

std::vector<FaceData> ApproxFaces(const Scheme& scheme) {
  std::vector<FaceData> faces;
  for (const auto& f : scheme.window()) faces.push_back({ToDoubles(f.normal), f.offset.to_double()});
  return faces;
}

}  // namespace

BoundaryConvention DefaultBoundaryConvention() { return BoundaryConvention::kOutwardPositive; }

BoundaryConvention Flipped(BoundaryConvention convention) {
  return convention == BoundaryConvention::kOutwardPositive ? BoundaryConvention::kOutwardNegative
                                                            : BoundaryConvention::kOutwardPositive;
}

const char* ToString(BoundaryConvention convention) {
  return convention == BoundaryConvention::kOutwardPositive ? "outward-positive"
                                                            : "outward-negative";
}

std::string GenerationPolicy::to_string() const {
  switch (window) {
    case WindowPolicy::kOpen:
      return "window-open";
    case WindowPolicy::kClosed:
      return "window-closed";
    case WindowPolicy::kConeLimit:
      return "cone-limit(" + ToString(cone_direction) + "; " + meyerion::ToString(convention) + ")";
  }
  return "?";
}

bool InWindow(const Scheme& scheme, std::span<const FieldScalar> h, const GenerationPolicy& policy) {
  if (policy.window == WindowPolicy::kConeLimit &&
      policy.cone_direction.size() != scheme.internal_dim()) {
    throw InputError("cone-limit direction has the wrong dimension");
  }
  for (const auto& f : scheme.window()) {
    const int s = (Dot(f.normal, h) - f.offset).sign();
    if (s < 0) continue;
    if (s > 0) return false;
    switch (policy.window) {
      case WindowPolicy::kOpen:
        return false;
      case WindowPolicy::kClosed:
        break;
      case WindowPolicy::kConeLimit: {
        const int t = Dot(f.normal, policy.cone_direction).sign();
        if (t != 0 && t != ConventionSign(policy.convention)) return false;
        break;
      }
    }
  }
  return true;
}

std::vector<FieldVector> WindowVertices(const Scheme& scheme) {
  const auto& faces = scheme.window();
  const std::size_t m = scheme.internal_dim();
  std::vector<FieldVector> vertices;
  std::vector<std::size_t> pick(m);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == m) {
      FieldMatrix a;
      FieldVector b;
      for (std::size_t i : pick) {
        a.push_back(faces[i].normal);
        b.push_back(faces[i].offset);
      }
      if (Determinant(a).is_zero()) return;
      FieldVector v = MatVec(Inverse(a), b);
      for (const auto& f : faces) {
        if ((Dot(f.normal, v) - f.offset).sign() > 0) return;
      }
      vertices.push_back(std::move(v));
      return;
    }
    for (std::size_t i = start; i < faces.size(); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  std::sort(vertices.begin(), vertices.end(),
            [](const FieldVector& x, const FieldVector& y) { return StructuralCompare(x, y) < 0; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::vector<LatticePoint> EnumerateModelSet(const Scheme& scheme,
                                            std::span<const FieldScalar> shift,
                                            const FieldScalar& radius,
                                            const GenerationPolicy& policy) {
  const std::size_t n_phys = scheme.physical_dim();
  const std::size_t m = scheme.internal_dim();
  const std::size_t n = scheme.rank();
  if (shift.size() != m) throw InputError("shift has the wrong dimension");
  if (radius.sign() < 0) throw InputError("radius must be nonnegative");
  if (policy.window == WindowPolicy::kConeLimit && policy.cone_direction.size() != m) {
    throw InputError("cone-limit direction has the wrong dimension");
  }
  if (scheme.stacked_inverse().empty()) {
    throw InvariantError("unbounded enumeration box: [p1; p2] is singular");
  }

  // Target box for v = (p1 z, p2 z).
  const double r = radius.to_double();
  std::vector<double> lo(n), hi(n);
  for (std::size_t j = 0; j < n_phys; ++j) lo[j] = -r, hi[j] = r;
  const auto vertices = WindowVertices(scheme);
  if (vertices.empty()) throw InvariantError("window has no vertices");
  for (std::size_t j = 0; j < m; ++j) {
    double a = INFINITY, b = -INFINITY;
    for (const auto& v : vertices) {
      a = std::min(a, v[j].to_double());
      b = std::max(b, v[j].to_double());
    }
    const double y = shift[j].to_double();
    lo[n_phys + j] = a + y;
    hi[n_phys + j] = b + y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double pad = kMargin * (1.0 + std::abs(lo[j]) + std::abs(hi[j]));
    lo[j] -= pad;
    hi[j] += pad;
  }

  FieldMatrix stacked = scheme.description().p1;
  for (const auto& row : scheme.description().p2) stacked.push_back(row);
  std::vector<std::vector<double>> s(n), s_inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = ToDoubles(stacked[i]);
    s_inv[i] = ToDoubles(scheme.stacked_inverse()[i]);
  }

  std::vector<long> z_lo(n), z_hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = 0, b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      a += std::min(s_inv[k][j] * lo[j], s_inv[k][j] * hi[j]);
      b += std::max(s_inv[k][j] * lo[j], s_inv[k][j] * hi[j]);
    }
    if (!std::isfinite(a) || !std::isfinite(b) || b - a > 1e7) {
      throw InvariantError("unbounded enumeration box");
    }
    z_lo[k] = static_cast<long>(std::floor(a - kMargin)) - 1;
    z_hi[k] = static_cast<long>(std::ceil(b + kMargin)) + 1;
  }

  // rem_lo[k][r], rem_hi[k][r]: range of sum_{j >= k} s[r][j] z_j.
  std::vector<std::vector<double>> rem_lo(n + 1, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> rem_hi(n + 1, std::vector<double>(n, 0.0));
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t row = 0; row < n; ++row) {
      const double a = s[row][k] * static_cast<double>(z_lo[k]);
      const double b = s[row][k] * static_cast<double>(z_hi[k]);
      rem_lo[k][row] = rem_lo[k + 1][row] + std::min(a, b);
      rem_hi[k][row] = rem_hi[k + 1][row] + std::max(a, b);
    }
  }

  const auto faces = ApproxFaces(scheme);
  std::vector<double> y_d = ToDoubles(shift);
  const FieldScalar r2 = radius * radius;
  const double r2_d = r * r;

  std::vector<LatticePoint> out;
  std::vector<long> z(n);
  std::vector<double> partial(n, 0.0);

  auto accept_leaf = [&]() {
    // partial holds v = S z in floating point.
    double phys2 = 0;
    for (std::size_t j = 0; j < n_phys; ++j) phys2 += partial[j] * partial[j];
    const double ball_tol = kMargin * (1.0 + r2_d);
    if (phys2 > r2_d + ball_tol) return;
    bool clear = phys2 < r2_d - ball_tol;
    for (const auto& f : faces) {
      double val = -f.offset;
      for (std::size_t j = 0; j < m; ++j) val += f.normal[j] * (partial[n_phys + j] - y_d[j]);
      if (val > kMargin) return;
      if (val > -kMargin) clear = false;
    }
    IntVector zz(z.begin(), z.end());
    LatticePoint p{zz, scheme.Physical(zz), scheme.Internal(zz)};
    if (!clear) {
      if (Compare(SquaredNorm(p.physical), r2) > 0) return;
      if (!InWindow(scheme, Subtract(p.internal, shift), policy)) return;
    }
    out.push_back(std::move(p));
  };

  std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (k == n) {
      accept_leaf();
      return;
    }
    long a = z_lo[k], b = z_hi[k];
    // Tighten the range of z_k from each row using the remaining freedom.
    for (std::size_t row = 0; row < n; ++row) {
      const double c = s[row][k];
      const double rest_lo = partial[row] + rem_lo[k + 1][row];
      const double rest_hi = partial[row] + rem_hi[k + 1][row];
      if (std::abs(c) < 1e-12) {
        if (rest_hi < lo[row] || rest_lo > hi[row]) return;
        continue;
      }
      double t1 = (lo[row] - rest_hi) / c, t2 = (hi[row] - rest_lo) / c;
      if (t1 > t2) std::swap(t1, t2);
      a = std::max(a, static_cast<long>(std::floor(t1 - kMargin)));
      b = std::min(b, static_cast<long>(std::ceil(t2 + kMargin)));
    }
    for (long v = a; v <= b; ++v) {
      z[k] = v;
      for (std::size_t row = 0; row < n; ++row) partial[row] += s[row][k] * static_cast<double>(v);
      recurse(k + 1);
      for (std::size_t row = 0; row < n; ++row) partial[row] -= s[row][k] * static_cast<double>(v);
    }
  };
  recurse(0);
  return out;
}

PointPattern GenerateModelSet(const Scheme& scheme, std::span<const FieldScalar> shift,
                              const FieldScalar& radius, const GenerationPolicy& policy) {
  std::vector<FieldVector> points;
  for (auto& p : EnumerateModelSet(scheme, shift, radius, policy)) {
    points.push_back(std::move(p.physical));
  }
  Provenance provenance{scheme.name() + "#" + scheme.Fingerprint(), ToString(shift),
                        policy.to_string()};
  return PointPattern(std::move(points), FieldVector(scheme.physical_dim()), radius,
                      std::move(provenance));
}

// ---------------------------------------------------------------------------

FieldScalar MinimumSquaredDistance(const PointPattern& pattern) {
  const std::size_t n = pattern.size();
  if (n < 2) return FieldScalar(0);
  double best = INFINITY;
  for (double probe = 1.0; !std::isfinite(best); probe *= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : pattern.CandidatesNear(pattern.approx(i), probe)) {
        if (j == i) continue;
        double d2 = 0;
        for (std::size_t k = 0; k < pattern.dim(); ++k) {
          const double t = pattern.approx(i)[k] - pattern.approx(j)[k];
          d2 += t * t;
        }
        best = std::min(best, d2);
      }
    }
    if (probe > 1e6) throw InvariantError("no neighbouring points found");
  }
  const double tol = kMargin * (1.0 + best);
  const double reach = std::sqrt(best + tol);
  FieldScalar exact;
  bool have = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : pattern.CandidatesNear(pattern.approx(i), reach)) {
      if (j <= i) continue;
      const FieldScalar d2 = SquaredNorm(Subtract(pattern.point(i), pattern.point(j)));
      if (d2.to_double() > best + tol) continue;
      if (!have || Compare(d2, exact) < 0) exact = d2, have = true;
    }
  }
  return exact;
}

CoveringCheck CheckCovering(const PointPattern& pattern, const FieldScalar& covering,
                            const mpq_class& step) {
  CoveringCheck result;
  if (sgn(step) <= 0) throw InputError("grid step must be positive");
  const FieldScalar inner = pattern.radius() - covering;
  if (inner.sign() < 0) return result;
  const std::size_t n = pattern.dim();
  const FieldScalar inner2 = inner * inner;
  const FieldScalar cov2 = covering * covering;
  const double cov_d = covering.to_double();
  const double cov2_d = cov_d * cov_d;
  std::vector<long> lo(n), hi(n), k(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = pattern.center()[j].to_double();
    lo[j] = static_cast<long>(std::floor((c - inner.to_double()) / step.get_d())) - 1;
    hi[j] = static_cast<long>(std::ceil((c + inner.to_double()) / step.get_d())) + 1;
  }
  k = lo;
  while (true) {
    FieldVector g(n);
    std::vector<double> gd(n);
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = FieldScalar(mpq_class(step * k[j]));
      gd[j] = g[j].to_double();
    }
    if (SquaredAtMost(SquaredNorm(Subtract(g, pattern.center())), inner2)) {
      ++result.grid_points;
      bool found = false;
      for (std::size_t i : pattern.CandidatesNear(gd, cov_d)) {
        double d2 = 0;
        for (std::size_t j = 0; j < n; ++j) {
          d2 += (pattern.approx(i)[j] - gd[j]) * (pattern.approx(i)[j] - gd[j]);
        }
        if (d2 < cov2_d - kMargin || SquaredAtMost(SquaredNorm(Subtract(pattern.point(i), g)), cov2)) {
          found = true;
          break;
        }
      }
      if (!found) {
        if (result.passed) result.first_failure = g;
        result.passed = false;
      }
    }
    std::size_t j = 0;
    while (j < n && k[j] == hi[j]) k[j] = lo[j], ++j;
    if (j == n) break;
    ++k[j];
  }
  return result;
}

std::size_t PatchClassCount(const PointPattern& pattern, const FieldScalar& r) {
  std::set<std::vector<std::int64_t>> classes;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (!pattern.Covers(pattern.point(i), r)) continue;
    std::vector<std::vector<std::int64_t>> rel;
    for (std::size_t j : pattern.InBall(pattern.point(i), r)) {
      std::vector<std::int64_t> d = pattern.key(j);
      for (std::size_t t = 0; t < d.size(); ++t) d[t] -= pattern.key(i)[t];
      rel.push_back(std::move(d));
    }
    std::sort(rel.begin(), rel.end());
    std::vector<std::int64_t> flat;
    for (const auto& d : rel) flat.insert(flat.end(), d.begin(), d.end());
    classes.insert(std::move(flat));
  }
  return classes.size();
}

namespace {

using Key = std::array<std::int64_t, 6>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

FieldVector FromKey(const Key& k, std::size_t dim, const mpz_class& scale, std::int64_t d) {
  FieldVector out;
  for (std::size_t j = 0; j < dim; ++j) {
    const mpq_class a(mpz_class(static_cast<long>(k[2 * j])), scale);
    const mpq_class b(mpz_class(static_cast<long>(k[2 * j + 1])), scale);
    out.push_back(d == 0 ? FieldScalar(mpq_class(a)) : FieldScalar(a, b, d));
  }
  return out;
}

std::vector<double> KeyToDoubles(const Key& k, std::size_t dim, double scale, double root) {
  std::vector<double> out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    out[j] = (static_cast<double>(k[2 * j]) + static_cast<double>(k[2 * j + 1]) * root) / scale;
  }
  return out;
}

}  // namespace

MeyerWitness ComputeMeyerWitness(const PointPattern& pattern, const FieldScalar& k_radius) {
  if (pattern.empty()) throw InputError("Meyer witness needs a nonempty pattern");
  if (k_radius.sign() < 0) throw InputError("K must be nonnegative");
  MeyerWitness result;
  const std::size_t n = pattern.size();
  const std::size_t dim = pattern.dim();
  const std::int64_t dd = pattern.key_discriminant();
  const double scale = pattern.key_scale().get_d();
  const double root = dd == 0 ? 0.0 : std::sqrt(static_cast<double>(dd));
  if (Compare(k_radius * FieldScalar(4), pattern.radius()) > 0) {
    result.warnings.push_back("K exceeds R/4: few differences lie in the reliable region");
  }

  std::unordered_set<Key, KeyHash> differences;
  differences.reserve(n * 4);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Key k{};
      for (std::size_t t = 0; t < 2 * dim; ++t) k[t] = pattern.key(a)[t] - pattern.key(b)[t];
      differences.insert(k);
    }
  }

  const double k_d = k_radius.to_double();
  const FieldScalar k2 = k_radius * k_radius;
  std::set<Key> f_keys;
  std::vector<Key> sorted_differences(differences.begin(), differences.end());
  std::sort(sorted_differences.begin(), sorted_differences.end());
  for (const Key& d : sorted_differences) {
    const auto pos = KeyToDoubles(d, dim, scale, root);
    bool covered = false;
    for (std::size_t c : pattern.CandidatesNear(pos, k_d)) {
      Key f{};
      for (std::size_t t = 0; t < 2 * dim; ++t) f[t] = d[t] - pattern.key(c)[t];
      if (f_keys.count(f)) {
        covered = true;
        continue;
      }
      const FieldVector fv = FromKey(f, dim, pattern.key_scale(), dd);
      if (SquaredAtMost(SquaredNorm(fv), k2)) {
        f_keys.insert(f);
        covered = true;
      }
    }
    const FieldVector dv = FromKey(d, dim, pattern.key_scale(), dd);
    if (pattern.Covers(dv, k_radius)) {
      ++result.checked_differences;
      if (!covered) {
        if (result.inclusion_holds) result.first_failure = dv;
        result.inclusion_holds = false;
      }
    }
  }
  for (const Key& f : f_keys) result.f.push_back(FromKey(f, dim, pattern.key_scale(), dd));
  std::sort(result.f.begin(), result.f.end(),
            [](const FieldVector& x, const FieldVector& y) { return StructuralCompare(x, y) < 0; });
  return result;
}

}  // namespace meyerion
