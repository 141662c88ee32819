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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "meyerion/errors.hpp"
#include "meyerion/model_set.hpp"
#include "meyerion/scheme.hpp"
#include "test_support.hpp"

using namespace meyerion;
using meyerion::testing::Octagonal;
using meyerion::testing::Fibonacci;

namespace {

FieldScalar Q(long p, long q = 1) { return FieldScalar(mpq_class(p, q)); }
FieldScalar R2(long p, long q = 1) { return FieldScalar(mpq_class(0), mpq_class(p, q), 2); }

// Test-only oracle: exact membership over a full integer box, no pruning.
std::vector<FieldVector> BruteForce(const Scheme& s, const FieldVector& shift, long radius,
                                    long box, bool closed) {
  std::vector<FieldVector> out;
  const FieldScalar r2 = Q(radius * radius);
  IntVector z(4);
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (long d = -box; d <= box; ++d) {
          z = {a, b, c, d};
          const FieldVector x = s.Physical(z);
          if (Compare(SquaredNorm(x), r2) > 0) continue;
          if (!s.WindowContains(Subtract(s.Internal(z), shift), closed)) continue;
          out.push_back(x);
        }
  std::sort(out.begin(), out.end(),
            [](const FieldVector& u, const FieldVector& v) { return StructuralCompare(u, v) < 0; });
  return out;
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("octagonal and Fibonacci validate") {
    for (const Scheme* s : {&Octagonal(), &Fibonacci()}) {
      const ValidationReport report = ValidateScheme(*s);
      CHECK(report.ok());
      for (const auto& item : report.items) {
        INFO(s->name() << " " << item.check << ": " << item.detail);
        CHECK(item.status == CheckStatus::kPass);
      }
    }
  }

  TEST_CASE("Fibonacci stacked determinant is 1 - 2 phi") {
    FieldMatrix m = Fibonacci().description().p1;
    m.push_back(Fibonacci().description().p2[0]);
    CHECK(Determinant(m) == FieldScalar(mpq_class(0), mpq_class(-1), 5));
  }

  TEST_CASE("zero internal projection fails density") {
    SchemeDescription d = Octagonal().description();
    for (auto& row : d.p2) std::fill(row.begin(), row.end(), Q(0));
    const ValidationReport report = ValidateScheme(Scheme(d));
    CHECK(report.StatusOf("p2_dense") == CheckStatus::kFail);
    CHECK(report.StatusOf("stacked_invertible") == CheckStatus::kFail);
    CHECK_FALSE(report.ok());
  }

  TEST_CASE("rational internal projection is not reported dense") {
    SchemeDescription d;
    d.name = "rational";
    d.physical_dim = d.internal_dim = 1;
    d.discriminant = 5;
    d.p1 = {{Q(1), FieldScalar(mpq_class(1, 2), mpq_class(1, 2), 5)}};
    d.p2 = {{Q(1), Q(2)}};
    d.window = {{{Q(1)}, Q(1)}, {{Q(-1)}, Q(1)}};
    d.hyperplanes = {{{Q(1)}, {Q(0)}}};
    d.transversal = {{1, 0}};
    CHECK(ValidateScheme(Scheme(d)).StatusOf("p2_dense") != CheckStatus::kPass);
  }

  TEST_CASE("unbounded or empty windows fail") {
    SchemeDescription d = Octagonal().description();
    d.window.resize(3);
    CHECK(ValidateScheme(Scheme(d)).StatusOf("window") == CheckStatus::kFail);
    d = Octagonal().description();
    d.window[0].offset = Q(-5);
    CHECK(ValidateScheme(Scheme(d)).StatusOf("window") == CheckStatus::kFail);
  }

  TEST_CASE("malformed descriptions are input errors") {
    SchemeDescription d = Octagonal().description();
    d.p1[0].pop_back();
    CHECK_THROWS_AS(Scheme{d}, InputError);
    d = Octagonal().description();
    d.p2[0][1] = FieldScalar::Sqrt(3);
    CHECK_THROWS_AS(Scheme{d}, InputError);
    d = Octagonal().description();
    d.transversal.pop_back();
    CHECK_THROWS_AS(Scheme{d}, InputError);
    nlohmann::json doc = SchemeToJson(Octagonal().description());
    doc.erase("window");
    CHECK_THROWS_AS(ParseSchemeJson(doc), InputError);
    doc = SchemeToJson(Octagonal().description());
    doc["p1"][0][1] = "1/2*sqrt(3)";
    CHECK_THROWS_AS(ParseSchemeJson(doc), InputError);
  }

  TEST_CASE("JSON round trip and fingerprint") {
    const nlohmann::json doc = SchemeToJson(Octagonal().description());
    const Scheme again(ParseSchemeJson(doc));
    CHECK(SchemeToJson(again.description()) == doc);
    CHECK(again.Fingerprint() == Octagonal().Fingerprint());
    CHECK(Octagonal().Fingerprint() != Fibonacci().Fingerprint());
  }
}

TEST_SUITE("torus") {
  TEST_CASE("lattice vectors reduce to zero") {
    for (const auto& delta : Octagonal().delta_basis()) {
      CHECK(IsZeroVector(TorusReduce(Octagonal(), delta)));
    }
  }

  TEST_CASE("sqrt(2) reduces by one period") {
    const FieldVector xi = TorusReduce(Octagonal(), FieldVector{R2(1), Q(0)});
    CHECK(xi == FieldVector{FieldScalar(mpq_class(-1), mpq_class(1), 2), Q(0)});
  }

  TEST_CASE("reduction is idempotent, lands in [0,1) and differs by Delta") {
    const Scheme& s = Octagonal();
    for (long a = -7; a <= 7; a += 2) {
      for (long b = -5; b <= 5; b += 3) {
        const FieldVector h{FieldScalar(mpq_class(a, 3), mpq_class(b, 5), 2), Q(b, 7) + R2(a, 2)};
        const FieldVector xi = TorusReduce(s, h);
        CHECK(TorusReduce(s, xi) == xi);
        for (const auto& c : s.DeltaCoordinates(xi)) {
          CHECK(c.sign() >= 0);
          CHECK(Compare(c, Q(1)) < 0);
        }
        for (const auto& c : s.DeltaCoordinates(Subtract(h, xi))) CHECK(c.is_rational());
        const FieldVector lift = TorusLiftNearZero(s, h);
        for (const auto& c : s.DeltaCoordinates(lift)) {
          CHECK(Compare(c, Q(-1, 2)) >= 0);
          CHECK(Compare(c, Q(1, 2)) < 0);
        }
      }
    }
  }
}

TEST_SUITE("generation") {
  TEST_CASE("octagonal regression count, closed window, R = 5") {
    const FieldVector y{Q(1, 5), Q(1, 7)};
    const PointPattern p = GenerateModelSet(Octagonal(), y, Q(5), GenerationPolicy::Closed());
    CHECK(p.size() == 93);
  }

  TEST_CASE("agrees with an unpruned exact box sweep") {
    const FieldVector y{Q(1, 5), Q(1, 7)};
    for (bool closed : {true, false}) {
      const auto policy = closed ? GenerationPolicy::Closed() : GenerationPolicy::Open();
      const PointPattern p = GenerateModelSet(Octagonal(), y, Q(3), policy);
      CHECK(p.points() == BruteForce(Octagonal(), y, 3, 5, closed));
    }
    const FieldVector zero{Q(0), Q(0)};
    const auto closed = GenerateModelSet(Octagonal(), zero, Q(3), GenerationPolicy::Closed());
    const auto open = GenerateModelSet(Octagonal(), zero, Q(3), GenerationPolicy::Open());
    CHECK(closed.points() == BruteForce(Octagonal(), zero, 3, 5, true));
    CHECK(open.points() == BruteForce(Octagonal(), zero, 3, 5, false));
    CHECK(open.size() < closed.size());
  }

  TEST_CASE("monotone in the window") {
    SchemeDescription d = Octagonal().description();
    for (auto& f : d.window) f.offset -= Q(1, 10);
    const Scheme smaller(d);
    const FieldVector y{Q(1, 5), Q(1, 7)};
    const auto big = GenerateModelSet(Octagonal(), y, Q(6), GenerationPolicy::Closed());
    const auto small = GenerateModelSet(smaller, y, Q(6), GenerationPolicy::Closed());
    CHECK(small.size() < big.size());
    for (const auto& p : small.points()) CHECK(big.Contains(p));
  }

  TEST_CASE("equivariant under lattice translation") {
    const Scheme& s = Octagonal();
    const FieldVector y{Q(1, 5), Q(1, 7)};
    const IntVector z0{1, -2, 0, 1};
    const FieldVector shifted = Add(y, s.Internal(z0));
    const FieldVector t = s.Physical(z0);
    const auto moved = GenerateModelSet(s, shifted, Q(6), GenerationPolicy::Closed());
    const auto base = GenerateModelSet(s, y, Q(10), GenerationPolicy::Closed());
    std::vector<FieldVector> expected;
    for (const auto& p : base.points()) {
      FieldVector q = Add(p, t);
      if (Compare(SquaredNorm(q), Q(36)) <= 0) expected.push_back(std::move(q));
    }
    std::sort(expected.begin(), expected.end(),
              [](const FieldVector& u, const FieldVector& v) { return StructuralCompare(u, v) < 0; });
    CHECK(moved.points() == expected);
  }

  TEST_CASE("cone limits sit between the open and closed patterns") {
    const FieldVector zero{Q(0), Q(0)};
    const auto open = GenerateModelSet(Octagonal(), zero, Q(6), GenerationPolicy::Open());
    const auto closed = GenerateModelSet(Octagonal(), zero, Q(6), GenerationPolicy::Closed());
    const FieldVector c1{Q(2), Q(1)}, c2{Q(1), Q(2)};
    const auto a = GenerateModelSet(Octagonal(), zero, Q(6), GenerationPolicy::ConeLimit(c1));
    const auto b = GenerateModelSet(Octagonal(), zero, Q(6), GenerationPolicy::ConeLimit(c2));
    CHECK_FALSE(a.SamePoints(b));
    for (const auto* p : {&a, &b}) {
      for (const auto& x : open.points()) CHECK(p->Contains(x));
      for (const auto& x : p->points()) CHECK(closed.Contains(x));
    }
  }

  TEST_CASE("cone limit matches the shifted-window limit") {
    const Scheme& s = Octagonal();
    const FieldVector zero{Q(0), Q(0)};
    const FieldVector c{Q(3), Q(1)};
    const auto limit = GenerateModelSet(s, zero, Q(6), GenerationPolicy::ConeLimit(c));
    const auto shifted = GenerateModelSet(s, Scale(Q(1, 256), c), Q(6), GenerationPolicy::Closed());
    CHECK(limit.SamePoints(shifted));
    const auto flipped = GenerateModelSet(
        s, zero, Q(6), GenerationPolicy::ConeLimit(c, Flipped(DefaultBoundaryConvention())));
    CHECK_FALSE(flipped.SamePoints(shifted));
  }

  TEST_CASE("Fibonacci density is covolume-consistent") {
    const auto p = GenerateModelSet(Fibonacci(), FieldVector{Q(0)}, Q(500), GenerationPolicy::Closed());
    const double density = static_cast<double>(p.size()) / 1000.0;
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(density == doctest::Approx(phi / std::sqrt(5.0)).epsilon(0.01));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(GenerateModelSet(Octagonal(), FieldVector{Q(0)}, Q(2), GenerationPolicy::Closed()),
                    InputError);
    CHECK_THROWS_AS(GenerateModelSet(Octagonal(), FieldVector{Q(0), Q(0)}, Q(-1),
                                     GenerationPolicy::Closed()),
                    InputError);
    SchemeDescription d = Octagonal().description();
    d.p2 = d.p1;
    CHECK_THROWS_AS(GenerateModelSet(Scheme(d), FieldVector{Q(0), Q(0)}, Q(2),
                                     GenerationPolicy::Closed()),
                    InvariantError);
  }
}

TEST_SUITE("patterns") {
  TEST_CASE("invariants are enforced") {
    CHECK_THROWS_AS(PointPattern({{Q(0), Q(0)}, {Q(0), Q(0)}}, {Q(0), Q(0)}, Q(1)), InvariantError);
    CHECK_THROWS_AS(PointPattern({{Q(2), Q(0)}}, {Q(0), Q(0)}, Q(1)), InvariantError);
    CHECK_NOTHROW(PointPattern({{Q(1), Q(0)}}, {Q(0), Q(0)}, Q(1)));
  }

  TEST_CASE("ball queries are exact on the boundary") {
    std::vector<FieldVector> pts;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        if (a * a + b * b <= 9) pts.push_back({Q(a), Q(b)});
    const PointPattern p(pts, {Q(0), Q(0)}, Q(3));
    CHECK(p.InBall(FieldVector{Q(0), Q(0)}, Q(1)).size() == 5);
    CHECK(p.InBall(FieldVector{Q(1, 2), Q(0)}, Q(1, 2)).size() == 2);
    CHECK(p.InBall(FieldVector{Q(0), Q(0)}, R2(1)).size() == 9);
    CHECK(p.Covers(FieldVector{Q(1), Q(0)}, Q(2)));
    CHECK_FALSE(p.Covers(FieldVector{Q(1), Q(0)}, Q(5, 2)));
    const PointPattern moved = p.Translated(FieldVector{R2(1), Q(0)});
    CHECK(moved.Contains(FieldVector{R2(1), Q(3)}));
    CHECK(moved.InBall(FieldVector{R2(1), Q(0)}, Q(1)).size() == 5);
  }
}

TEST_SUITE("meyer") {
  TEST_CASE("integer lattice gives the nine short vectors") {
    std::vector<FieldVector> pts;
    for (long a = -10; a <= 10; ++a)
      for (long b = -10; b <= 10; ++b)
        if (a * a + b * b <= 100) pts.push_back({Q(a), Q(b)});
    const PointPattern p(pts, {Q(0), Q(0)}, Q(10));
    const MeyerWitness w = ComputeMeyerWitness(p, Q(3, 2));
    CHECK(w.f.size() == 9);
    CHECK(w.inclusion_holds);
    CHECK(w.checked_differences > 0);
    CHECK(w.warnings.empty());
  }

  TEST_CASE("single point gives F = {0}") {
    const PointPattern p({{Q(0), Q(0)}}, {Q(0), Q(0)}, Q(0));
    const MeyerWitness w = ComputeMeyerWitness(p, Q(1));
    REQUIRE(w.f.size() == 1);
    CHECK(IsZeroVector(w.f[0]));
    CHECK(w.inclusion_holds);
    CHECK_FALSE(w.warnings.empty());
  }

  TEST_CASE("octagonal patch, R = 20, K = 1") {
    const FieldVector y{Q(1, 5), Q(1, 7)};
    const auto p = GenerateModelSet(Octagonal(), y, Q(20), GenerationPolicy::Closed());
    CHECK(p.size() == 1516);
    const MeyerWitness w = ComputeMeyerWitness(p, Q(1));
    CHECK(w.f.size() == 34);
    CHECK(w.inclusion_holds);
    CHECK(MinimumSquaredDistance(p) == FieldScalar(mpq_class(2), mpq_class(-1), 2));
    const CoveringCheck cover = CheckCovering(p, R2(1, 2), mpq_class(1, 4));
    CHECK(cover.passed);
    CHECK(cover.grid_points > 10000);
    CHECK_FALSE(CheckCovering(p, Q(1, 2), mpq_class(1, 4)).passed);
  }

  TEST_CASE("empty pattern is an input error") {
    CHECK_THROWS_AS(ComputeMeyerWitness(PointPattern({}, {Q(0)}, Q(1)), Q(1)), InputError);
  }
}
