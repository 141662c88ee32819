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

#include "meyerion/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "meyerion/errors.hpp"

namespace meyerion {

namespace {

void RequireCover(const PointPattern& p, std::span<const FieldScalar> c, const FieldScalar& r) {
  if (!p.Covers(c, r)) {
    throw ReliabilityError("pattern complete on B_" + p.radius().to_string() +
                           " does not cover B_" + r.to_string() + "(" + ToString(c) + ")");
  }
}

std::vector<FieldVector> PatchPoints(const PointPattern& p, std::span<const FieldScalar> c,
                                     const FieldScalar& r) {
  std::vector<FieldVector> out;
  for (std::size_t i : p.InBall(c, r)) out.push_back(p.point(i));
  return out;
}

std::vector<FieldVector> Recentered(std::vector<FieldVector> points, std::span<const FieldScalar> c) {
  for (auto& q : points) q = Subtract(q, c);
  std::sort(points.begin(), points.end(), [](const FieldVector& x, const FieldVector& y) {
    return StructuralCompare(x, y) < 0;
  });
  return points;
}

// Integer offsets v in [-k, k]^dim with |v|^2 <= k^2.
void BallOffsets(std::size_t dim, long k, std::vector<long>& current,
                 std::vector<std::vector<long>>& out) {
  if (current.size() == dim) {
    long s = 0;
    for (long v : current) s += v * v;
    if (s <= k * k) out.push_back(current);
    return;
  }
  for (long v = -k; v <= k; ++v) {
    current.push_back(v);
    BallOffsets(dim, k, current, out);
    current.pop_back();
  }
}

FieldVector GridVector(std::span<const long> v, const mpq_class& step) {
  FieldVector out;
  for (long x : v) out.emplace_back(mpq_class(step * x));
  return out;
}

}  // namespace

PointPattern BallPatch(const PointPattern& p, std::span<const FieldScalar> c, const FieldScalar& r) {
  RequireCover(p, c, r);
  Provenance provenance = p.provenance();
  provenance.policy += " patch B_" + r.to_string() + "(" + ToString(c) + ")";
  return PointPattern(Recentered(PatchPoints(p, c, r), c), FieldVector(p.dim()), r,
                      std::move(provenance));
}

bool PatchesEqual(const PointPattern& a, std::span<const FieldScalar> ta, const PointPattern& b,
                  std::span<const FieldScalar> tb, const FieldScalar& r) {
  RequireCover(a, ta, r);
  RequireCover(b, tb, r);
  auto pa = PatchPoints(a, ta, r);
  auto pb = PatchPoints(b, tb, r);
  if (pa.size() != pb.size()) return false;
  if (std::equal(ta.begin(), ta.end(), tb.begin(), tb.end())) return pa == pb;
  return Recentered(std::move(pa), ta) == Recentered(std::move(pb), tb);
}

MetricBound HullMetricUpper(const PointPattern& a, const PointPattern& b, const mpq_class& step,
                            const mpq_class& max_epsilon) {
  if (step <= 0) throw InputError("grid step must be positive");
  if (a.dim() != b.dim()) throw InputError("patterns of different dimension");
  MetricBound bound;
  const FieldVector origin(a.dim());
  for (long k = 1; step * k <= max_epsilon; ++k) {
    const mpq_class eps = step * k;
    const mpq_class inv = 1 / eps;
    const FieldScalar reach(mpq_class(inv + eps));
    if (!a.Covers(origin, reach) || !b.Covers(origin, reach)) continue;
    std::vector<std::vector<long>> offsets;
    std::vector<long> scratch;
    BallOffsets(a.dim(), k, scratch, offsets);
    // Smallest translations first.
    std::stable_sort(offsets.begin(), offsets.end(), [](const auto& x, const auto& y) {
      long sx = 0, sy = 0;
      for (long v : x) sx += v * v;
      for (long v : y) sy += v * v;
      return sx < sy;
    });
    for (const auto& u : offsets) {
      const FieldVector t = GridVector(u, step);
      for (const auto& v : offsets) {
        ++bound.candidates;
        const FieldVector tp = GridVector(v, step);
        if (PatchesEqual(a, t, b, tp, FieldScalar(inv))) {
          bound.found = true;
          bound.epsilon = eps;
          bound.value = eps / (eps + 1);
          bound.t = t;
          bound.t_prime = tp;
          return bound;
        }
      }
    }
  }
  return bound;
}

std::vector<FieldVector> WitnessCandidates(const PointPattern& a, const mpq_class& half_width,
                                           const mpq_class& step) {
  if (step <= 0 || half_width < 0) throw InputError("invalid witness search box");
  const FieldScalar hw(half_width);
  std::vector<FieldVector> points, grid;
  for (const auto& p : a.points()) {
    bool inside = true;
    for (const auto& x : p) inside = inside && Compare(x, hw) <= 0 && Compare(x, -hw) >= 0;
    if (inside) points.push_back(p);
  }
  mpq_class lo_q = -half_width / step - mpq_class(1, 2);
  mpz_class lo;
  mpz_cdiv_q(lo.get_mpz_t(), lo_q.get_num_mpz_t(), lo_q.get_den_mpz_t());
  const long first = lo.get_si();
  const long last = -first - 1;
  std::vector<long> idx(a.dim(), first);
  if (first <= last) {
    while (true) {
      FieldVector t;
      for (long j : idx) t.emplace_back(mpq_class(step * (mpq_class(j) + mpq_class(1, 2))));
      grid.push_back(std::move(t));
      std::size_t d = 0;
      while (d < idx.size() && idx[d] == last) idx[d++] = first;
      if (d == idx.size()) break;
      ++idx[d];
    }
  }
  auto by_norm = [](const FieldVector& x, const FieldVector& y) {
    const int c = Compare(SquaredNorm(x), SquaredNorm(y));
    return c != 0 ? c < 0 : StructuralCompare(x, y) < 0;
  };
  std::sort(points.begin(), points.end(), by_norm);
  std::sort(grid.begin(), grid.end(), by_norm);
  std::vector<FieldVector> out{FieldVector(a.dim())};
  for (auto* part : {&points, &grid}) {
    for (auto& t : *part) {
      if (!(t == out.front())) out.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<FieldVector> StrongProximalWitness(const PointPattern& a, const PointPattern& b,
                                                 const FieldScalar& r, const mpq_class& half_width,
                                                 const mpq_class& step) {
  if (a.dim() != b.dim()) throw InputError("patterns of different dimension");
  // B_r(t) for t in the box is covered iff it is covered at every corner.
  std::vector<int> signs(a.dim(), -1);
  while (true) {
    FieldVector corner;
    for (int s : signs) corner.emplace_back(mpq_class(half_width * s));
    RequireCover(a, corner, r);
    RequireCover(b, corner, r);
    std::size_t d = 0;
    while (d < signs.size() && signs[d] == 1) signs[d++] = -1;
    if (d == signs.size()) break;
    signs[d] = 1;
  }
  for (const auto& t : WitnessCandidates(a, half_width, step)) {
    if (PatchesEqual(a, t, b, t, r)) return t;
  }
  return std::nullopt;
}

double BallVolume(std::size_t dim, double r) {
  switch (dim) {
    case 1:
      return 2 * r;
    case 2:
      return std::numbers::pi * r * r;
    case 3:
      return 4.0 / 3.0 * std::numbers::pi * r * r * r;
  }
  throw UnsupportedError("ball volume in dimension " + std::to_string(dim));
}

std::string DensityEstimate::Csv() const {
  std::ostringstream out;
  out << "radius,count,density\n";
  out.precision(9);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    out << radii[i].to_string() << ',' << counts[i] << ',' << densities[i] << '\n';
  }
  return out.str();
}

DensityEstimate StatisticalCoincidence(const PointPattern& a, const PointPattern& b,
                                       std::span<const FieldScalar> radii) {
  if (a.dim() != b.dim()) throw InputError("patterns of different dimension");
  DensityEstimate est;
  const FieldVector origin(a.dim());
  for (const auto& r : radii) {
    if (r.sign() <= 0) throw InputError("radii must be positive");
    if (!est.radii.empty() && Compare(r, est.radii.back()) <= 0) {
      throw InputError("radii must be strictly increasing");
    }
    RequireCover(a, origin, r);
    RequireCover(b, origin, r);
    est.radii.push_back(r);
    est.counts.push_back(SymmetricDifferenceCount(a, b, r));
    est.densities.push_back(double(est.counts.back()) / BallVolume(a.dim(), r.to_double()));
  }
  return est;
}

// ---------------------------------------------------------------------------

std::vector<PointPattern> FiberSet::Patterns(const Scheme& scheme, const FieldScalar& radius) const {
  std::vector<PointPattern> out;
  for (const auto& e : elements) out.push_back(GenerateModelSet(scheme, xi, radius, e.policy));
  return out;
}

FiberSet FiberElements(const Scheme& scheme, const Arrangement& arrangement,
                       std::span<const FieldScalar> xi, BoundaryConvention convention) {
  if (!arrangement.minimal_complexity) {
    throw UnsupportedError("fiber elements need an arrangement of minimal complexity");
  }
  FiberSet fiber;
  fiber.xi = TorusReduce(scheme, xi);
  fiber.cut = ComputeCutType(scheme, fiber.xi);
  for (const PointType* p : arrangement.PointTypesWithDomain(fiber.cut)) {
    fiber.elements.push_back({*p, GenerationPolicy::ConeLimit(p->witness, convention)});
  }
  if (fiber.elements.empty()) {
    throw InvariantError("no point type has domain " + fiber.cut.to_string());
  }
  return fiber;
}

std::size_t DistinctPatchCount(std::span<const PointPattern> patterns,
                               std::span<const FieldScalar> c, const FieldScalar& r) {
  std::vector<std::vector<FieldVector>> seen;
  for (const auto& p : patterns) {
    RequireCover(p, c, r);
    auto patch = PatchPoints(p, c, r);
    if (std::find(seen.begin(), seen.end(), patch) == seen.end()) seen.push_back(std::move(patch));
  }
  return seen.size();
}

std::size_t CountPatchesAtZero(const Scheme& scheme, const Arrangement& arrangement,
                               std::span<const FieldScalar> xi, const FieldScalar& r) {
  const FiberSet fiber = FiberElements(scheme, arrangement, xi);
  const auto patterns = fiber.Patterns(scheme, r);
  return DistinctPatchCount(patterns, FieldVector(scheme.physical_dim()), r);
}

std::vector<FieldVector> SampleTranslates(std::size_t dim, const mpq_class& side, std::size_t count,
                                          std::uint64_t seed, long resolution) {
  if (side < 0 || resolution <= 0) throw InputError("invalid translate box");
  mpq_class half = side * resolution / 2;
  mpz_class h;
  mpz_fdiv_q(h.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-h.get_si(), h.get_si());
  std::vector<FieldVector> out(count);
  for (auto& t : out) {
    for (std::size_t d = 0; d < dim; ++d) t.emplace_back(mpq_class(coord(rng), resolution));
  }
  return out;
}

CoincidenceRank EstimateCoincidenceRank(std::span<const PointPattern> patterns,
                                        const FieldScalar& r,
                                        std::span<const FieldVector> translates) {
  const std::size_t n = patterns.size();
  if (n > 20) throw UnsupportedError("coincidence rank for more than 20 fiber elements");
  CoincidenceRank cr;
  cr.samples = translates.size();
  std::vector<std::uint32_t> apart(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool met = false;
      for (const auto& t : translates) {
        if (PatchesEqual(patterns[i], t, patterns[j], t, r)) {
          cr.witnesses.push_back({i, j, t});
          met = true;
          break;
        }
      }
      if (!met) {
        cr.non_coincident.emplace_back(i, j);
        apart[i] |= 1u << j;
        apart[j] |= 1u << i;
      }
    }
  }
  std::uint32_t best = n == 0 ? 0 : 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) <= std::popcount(best)) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if ((mask >> i & 1u) && (mask & ~(1u << i) & ~apart[i])) clique = false;
    }
    if (clique) best = mask;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (best >> i & 1u) cr.clique.push_back(i);
  }
  cr.estimate = cr.clique.size();
  return cr;
}

SingleClassFraction SinglePatchFraction(std::span<const PointPattern> patterns,
                                        const FieldScalar& r,
                                        std::span<const FieldVector> translates) {
  SingleClassFraction f;
  for (const auto& t : translates) {
    ++f.samples;
    f.single += DistinctPatchCount(patterns, t, r) == 1;
  }
  return f;
}

FieldScalar CoverageRadius(std::size_t dim, const mpq_class& side, const FieldScalar& r) {
  const double corner = side.get_d() / 2 * std::sqrt(double(dim));
  return FieldScalar(mpq_class(static_cast<long>(std::ceil(corner)) + 1)) + r;
}

// ---------------------------------------------------------------------------

PointPattern ShiftedWindowPattern(const Scheme& scheme, std::span<const FieldScalar> y,
                                  std::span<const FieldScalar> c, unsigned k,
                                  const FieldScalar& radius) {
  mpz_class denom = 1;
  denom <<= k;
  const FieldVector shifted = Add(y, Scale(FieldScalar(mpq_class(1, denom)), c));
  return GenerateModelSet(scheme, shifted, radius, GenerationPolicy::Closed());
}

ConventionCheck ValidateBoundaryConvention(const Scheme& scheme, const Arrangement& arrangement,
                                           std::span<const FieldVector> xis,
                                           BoundaryConvention start, const FieldScalar& radius,
                                           std::span<const unsigned> ks) {
  if (ks.empty()) throw InputError("no oracle exponents");
  ConventionCheck check{start, start};
  std::vector<std::pair<FiberSet, std::vector<PointPattern>>> oracles;
  for (const auto& xi : xis) {
    FiberSet fiber = FiberElements(scheme, arrangement, xi, start);
    std::vector<PointPattern> reference;
    for (const auto& e : fiber.elements) {
      std::vector<PointPattern> by_k;
      for (unsigned k : ks) {
        by_k.push_back(ShiftedWindowPattern(scheme, fiber.xi, e.type.witness, k, radius));
      }
      for (const auto& p : by_k) check.oracle_stable &= p.SamePoints(by_k.back());
      reference.push_back(by_k.back());
    }
    oracles.emplace_back(std::move(fiber), std::move(reference));
  }
  auto mismatches = [&](BoundaryConvention convention) {
    std::size_t bad = 0;
    check.compared = 0;
    for (const auto& [fiber, reference] : oracles) {
      for (std::size_t i = 0; i < fiber.elements.size(); ++i) {
        const auto policy = GenerationPolicy::ConeLimit(fiber.elements[i].type.witness, convention);
        ++check.compared;
        bad += !GenerateModelSet(scheme, fiber.xi, radius, policy).SamePoints(reference[i]);
      }
    }
    return bad;
  };
  check.initial_mismatches = mismatches(start);
  check.final_mismatches = check.initial_mismatches;
  if (check.initial_mismatches > 0) {
    check.flipped = true;
    check.final = Flipped(start);
    check.final_mismatches = mismatches(check.final);
  }
  return check;
}

}  // namespace meyerion
