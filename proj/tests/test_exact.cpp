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
#include <complex>
#include <random>

#include "meyerion/errors.hpp"
#include "meyerion/field_scalar.hpp"
#include "meyerion/lattice.hpp"
#include "meyerion/polyhedra.hpp"
#include "meyerion/polynomial.hpp"

using namespace meyerion;

namespace {

FieldScalar Q(long p, long q = 1) { return FieldScalar(mpq_class(p, q)); }
FieldScalar R2(long p, long q = 1) { return FieldScalar(mpq_class(0), mpq_class(p, q), 2); }

// Test-only numeric oracle: Durand-Kerner roots of an integer polynomial.
std::vector<std::complex<double>> NumericRoots(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x.get_d() / p.leading().get_d(), 0.0);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), i);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j) {
        if (i != j) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / denom;
    }
  }
  return z;
}

LinearForm Form(std::vector<FieldScalar> coefficients, Relation relation) {
  return LinearForm{std::move(coefficients), FieldScalar(0), relation};
}

}  // namespace

TEST_SUITE("field_scalar") {
  TEST_CASE("sign examples") {
    CHECK(field_sign(FieldScalar(0)) == 0);
    CHECK(field_sign(Q(3) - R2(2)) == 1);      // 9 vs 8
    CHECK(field_sign(Q(1) - R2(3, 4)) == -1);  // 1 vs 9/8
    CHECK(field_sign(R2(1) - Q(1)) == 1);
    CHECK(field_sign(-R2(1) + Q(2)) == 1);
  }

  TEST_CASE("sign agrees with the real embedding and the sign laws") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (int i = 0; i < 2000; ++i) {
      const std::int64_t d = std::array<std::int64_t, 3>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
      const FieldScalar x(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), d);
      const double v = x.to_double();
      if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
      CHECK(field_sign(x) * field_sign(-x) == -(field_sign(x) * field_sign(x)));
      CHECK(field_sign(x * x) >= 0);
    }
  }

  TEST_CASE("arithmetic is exact and canonical") {
    const FieldScalar s = R2(1);
    CHECK(s * s == Q(2));
    CHECK((Q(1) + s) * (Q(1) - s) == Q(-1));
    CHECK((Q(1) / (Q(1) + s)) == (s - Q(1)));
    CHECK((s - s).discriminant() == 0);
    CHECK(FieldScalar(mpq_class(2, 4)) == Q(1, 2));
    CHECK_THROWS_AS(R2(1) + FieldScalar::Sqrt(5), InputError);
    CHECK_THROWS_AS(FieldScalar(mpq_class(0), mpq_class(1), 4), InputError);
  }

  TEST_CASE("floor is decided exactly") {
    CHECK(R2(1).floor() == 1);
    CHECK((-R2(1)).floor() == -2);
    CHECK(Q(3).floor() == 3);
    CHECK((Q(-7, 2)).floor() == -4);
    // 140/99 < sqrt(2) < 99/70, both within 10^-4
    CHECK((R2(1) - Q(140, 99)).floor() == 0);
    CHECK((R2(1) - Q(99, 70)).floor() == -1);
  }

  TEST_CASE("text form round-trips") {
    for (const char* text : {"0", "-3/4", "1 + -1/2*sqrt(2)", "1/3 + 2*sqrt(5)", "0 + 1*sqrt(2)"}) {
      const FieldScalar x = FieldScalar::Parse(text);
      CHECK(FieldScalar::Parse(x.to_string()) == x);
    }
    CHECK(FieldScalar::Parse(" 1 - 1/2 * sqrt( 2 ) ") == Q(1) - R2(1, 2));
    CHECK(FieldScalar::Parse("sqrt(2)") == R2(1));
    CHECK(FieldScalar::Parse("-sqrt(2)") == -R2(1));
    CHECK(FieldScalar::Parse("1/2+-1/2*sqrt(5)") ==
          FieldScalar(mpq_class(1, 2), mpq_class(-1, 2), 5));
    CHECK(FieldScalar::Parse("0.25") == Q(1, 4));
    CHECK_THROWS_AS(FieldScalar::Parse("1 + sqrt(2)", 5), InputError);
    CHECK_THROWS_AS(FieldScalar::Parse("1/0"), InputError);
    CHECK_THROWS_AS(FieldScalar::Parse("abc"), InputError);
  }

  TEST_CASE("linear algebra over the field") {
    const FieldMatrix m{{Q(1), R2(1)}, {R2(1), Q(3)}};
    CHECK(Determinant(m) == Q(1));
    const FieldMatrix inv = Inverse(m);
    const FieldMatrix id = MatMul(m, inv);
    CHECK(id[0][0] == Q(1));
    CHECK(id[0][1] == Q(0));
    CHECK(id[1][1] == Q(1));
    CHECK(Rank(FieldMatrix{{Q(1), R2(1)}, {R2(1), Q(2)}}) == 1);
    const FieldMatrix k = Kernel(FieldMatrix{{Q(1), R2(1)}});
    REQUIRE(k.size() == 1);
    CHECK(Dot(k[0], FieldVector{Q(1), R2(1)}).is_zero());
  }
}

TEST_SUITE("hnf") {
  TEST_CASE("normal form shape and unimodularity") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix a(4, 3);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = e(rng);
      }
      const HermiteForm hf = HermiteNormalForm(a);
      CHECK(hf.u * a == hf.h);
      CHECK(abs(IntDeterminant(hf.u)) == 1);
      for (std::size_t r = 0; r < hf.rank; ++r) {
        const std::size_t c = hf.pivot_columns[r];
        CHECK(hf.h(r, c) > 0);
        for (std::size_t k = 0; k < r; ++k) {
          CHECK(hf.h(k, c) >= 0);
          CHECK(hf.h(k, c) < hf.h(r, c));
        }
        for (std::size_t k = r + 1; k < 4; ++k) CHECK(hf.h(k, c) == 0);
      }
      for (std::size_t r = hf.rank; r < 4; ++r) {
        for (std::size_t c = 0; c < 3; ++c) CHECK(hf.h(r, c) == 0);
      }
    }
  }

  TEST_CASE("membership examples") {
    const std::vector<RationalVector> e2{{1, 0}, {0, 1}};
    auto m = HnfMembership(e2, RationalVector{1, 0});
    CHECK(m.member);
    CHECK(m.coefficients == IntVector{1, 0});
    CHECK_FALSE(HnfMembership(e2, RationalVector{mpq_class(1, 3), 0}).member);

    // l1-images of the octagonal Gamma generators.
    const std::vector<RationalVector> l1{
        {0, 0}, {0, mpq_class(1, 2)}, {-1, 0}, {0, mpq_class(1, 2)}};
    CHECK_FALSE(HnfMembership(l1, RationalVector{mpq_class(1, 3), 0}).member);
    auto half = HnfMembership(l1, RationalVector{0, mpq_class(1, 2)});
    CHECK(half.member);
    CHECK_THROWS_AS(HnfMembership(l1, RationalVector{1, 2, 3}), InputError);
  }

  TEST_CASE("membership agrees with brute force and is invariant under reordering") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> e(-3, 3), den(1, 3);
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<RationalVector> gens(3, RationalVector(2));
      for (auto& g : gens) {
        for (auto& x : g) {
          x = mpq_class(e(rng), den(rng));
          x.canonicalize();
        }
      }
      RationalVector target{mpq_class(e(rng), den(rng)), mpq_class(e(rng), den(rng))};
      for (auto& x : target) x.canonicalize();
      // Brute force over a coefficient box; a found combination proves
      // membership, and a found HNF certificate must reconstruct the target.
      bool brute = false;
      for (long a = -12; a <= 12 && !brute; ++a) {
        for (long b = -12; b <= 12 && !brute; ++b) {
          for (long c = -12; c <= 12 && !brute; ++c) {
            brute = a * gens[0][0] + b * gens[1][0] + c * gens[2][0] == target[0] &&
                    a * gens[0][1] + b * gens[1][1] + c * gens[2][1] == target[1];
          }
        }
      }
      const auto m = HnfMembership(gens, target);
      if (brute) CHECK(m.member);
      if (m.member) {
        for (std::size_t j = 0; j < 2; ++j) {
          mpq_class sum = 0;
          for (std::size_t i = 0; i < 3; ++i) sum += m.coefficients[i] * gens[i][j];
          CHECK(sum == target[j]);
        }
      }
      std::vector<RationalVector> shuffled{gens[2], gens[0], gens[1]};
      CHECK(HnfMembership(shuffled, target).member == m.member);
      // Unimodular change: g0 -> g0 + 2 g1.
      std::vector<RationalVector> changed = gens;
      for (std::size_t j = 0; j < 2; ++j) changed[0][j] += 2 * gens[1][j];
      CHECK(HnfMembership(changed, target).member == m.member);
    }
  }

  TEST_CASE("integer relations span the kernel") {
    const std::vector<RationalVector> gens{{1, 0}, {0, 1}, {1, 1}, {2, 0}};
    const auto rel = IntegerRelations(gens);
    CHECK(rel.size() == 2);
    for (const auto& r : rel) {
      for (std::size_t j = 0; j < 2; ++j) {
        mpq_class sum = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) sum += r[i] * gens[i][j];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_SUITE("fourier_motzkin") {
  TEST_CASE("contradictory pair") {
    const std::vector<LinearForm> c{Form({Q(1)}, Relation::kPositive),
                                    Form({Q(-1)}, Relation::kPositive)};
    CHECK_FALSE(FmFeasible(c, 1).feasible);
  }

  TEST_CASE("octagonal half-line (0,-,+,+) is feasible on the positive x-axis") {
    const std::vector<LinearForm> c{
        Form({Q(0), Q(1)}, Relation::kEqual),        // y = 0
        Form({Q(1), Q(-1)}, Relation::kPositive),    // -(y - x) > 0
        Form({Q(1), Q(0)}, Relation::kPositive),     // x > 0
        Form({Q(1), Q(1)}, Relation::kPositive)};    // x + y > 0
    const auto f = FmFeasible(c, 2);
    REQUIRE(f.feasible);
    CHECK(f.witness[1] == Q(0));
    CHECK(f.witness[0].sign() > 0);
    for (const auto& form : c) CHECK(form.SatisfiedBy(f.witness));
  }

  TEST_CASE("two distinct lines meet only at the origin") {
    const std::vector<LinearForm> c{
        Form({Q(0), Q(1)}, Relation::kEqual), Form({Q(-1), Q(1)}, Relation::kEqual),
        Form({Q(1), Q(0)}, Relation::kPositive), Form({Q(1), Q(1)}, Relation::kPositive)};
    CHECK_FALSE(FmFeasible(c, 2).feasible);
  }

  TEST_CASE("strictness propagates through elimination") {
    // x >= y, y >= x, x > y is infeasible only because of strictness.
    const std::vector<LinearForm> c{Form({Q(1), Q(-1)}, Relation::kNonNegative),
                                    Form({Q(-1), Q(1)}, Relation::kNonNegative),
                                    Form({Q(1), Q(-1)}, Relation::kPositive)};
    CHECK_FALSE(FmFeasible(c, 2).feasible);
    const std::vector<LinearForm> d{c[0], c[1]};
    CHECK(FmFeasible(d, 2).feasible);
  }

  TEST_CASE("irrational directions and affine constants") {
    // sqrt(2) x - y > 0, y - x > 0, x - 1 >= 0
    std::vector<LinearForm> c{Form({R2(1), Q(-1)}, Relation::kPositive),
                              Form({Q(-1), Q(1)}, Relation::kPositive),
                              LinearForm{{Q(1), Q(0)}, Q(-1), Relation::kNonNegative}};
    const auto f = FmFeasible(c, 2);
    REQUIRE(f.feasible);
    for (const auto& form : c) CHECK(form.SatisfiedBy(f.witness));
    c.push_back(LinearForm{{Q(-1), Q(0)}, Q(1, 2), Relation::kNonNegative});  // x <= 1/2
    CHECK_FALSE(FmFeasible(c, 2).feasible);
  }

  TEST_CASE("random systems: witnesses are exact and agree with a sampling oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> e(-3, 3);
    int feasible_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<LinearForm> c;
      for (int k = 0; k < 4; ++k) {
        c.push_back(LinearForm{{Q(e(rng)), Q(e(rng))}, Q(e(rng)),
                               k % 2 ? Relation::kPositive : Relation::kNonNegative});
      }
      const auto f = FmFeasible(c, 2);
      if (f.feasible) {
        ++feasible_count;
        for (const auto& form : c) CHECK(form.SatisfiedBy(f.witness));
      } else {
        // No grid point may satisfy an infeasible system.
        for (long x = -24; x <= 24; ++x) {
          for (long y = -24; y <= 24; ++y) {
            const FieldVector p{Q(x, 4), Q(y, 4)};
            CHECK_FALSE(std::all_of(c.begin(), c.end(),
                                    [&](const LinearForm& form) { return form.SatisfiedBy(p); }));
          }
        }
      }
    }
    CHECK(feasible_count > 0);
  }

  TEST_CASE("dimension mismatch is an input error") {
    const std::vector<LinearForm> c{Form({Q(1)}, Relation::kPositive)};
    CHECK_THROWS_AS(FmFeasible(c, 2), InputError);
  }
}

TEST_SUITE("unit_disk") {
  TEST_CASE("examples") {
    auto a = SchurCohnUnitDiskCount(IntPolynomial{-2, 1});
    CHECK(a.inside == 0);
    CHECK_FALSE(a.roots_on_circle());
    auto b = SchurCohnUnitDiskCount(IntPolynomial{-1, -1, 1});
    CHECK(b.inside == 1);
    CHECK_FALSE(b.roots_on_circle());
    auto c = SchurCohnUnitDiskCount(IntPolynomial{-3, -1, 1});
    CHECK(c.inside == 0);
    CHECK_FALSE(c.roots_on_circle());
    CHECK_THROWS_AS(SchurCohnUnitDiskCount(IntPolynomial{}), InputError);
  }

  TEST_CASE("circle roots with multiplicity and reciprocal pairs") {
    // (x^2 + 1)(x - 3)
    auto a = SchurCohnUnitDiskCount(IntPolynomial{-3, 1, -3, 1});
    CHECK(a.on_circle == 2);
    CHECK(a.inside == 0);
    CHECK(a.outside == 1);
    // (x^2 + x + 1)^2 x
    auto b = SchurCohnUnitDiskCount(IntPolynomial{0, 1, 2, 3, 2, 1});
    CHECK(b.on_circle == 4);
    CHECK(b.inside == 1);
    // (x - 2)(2x - 1)(x + 1)^2 : reciprocal pair 2, 1/2 and a double root at -1
    auto c = SchurCohnUnitDiskCount(IntPolynomial{2, -1, -6, -1, 2});
    CHECK(c.on_circle == 2);
    CHECK(c.inside == 1);
    CHECK(c.outside == 1);
    // Salem-type reciprocal quartic x^4 - x^3 - x^2 - x + 1: two circle roots.
    auto d = SchurCohnUnitDiskCount(IntPolynomial{1, -1, -1, -1, 1});
    CHECK(d.on_circle == 2);
    CHECK(d.inside == 1);
    CHECK(d.outside == 1);
  }

  TEST_CASE("counts agree with numeric roots; inside + on + outside = degree") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long> e(-6, 6), deg(1, 6);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = static_cast<int>(deg(rng));
      std::vector<mpz_class> c;
      for (int k = 0; k <= n; ++k) c.emplace_back(e(rng));
      if (c.back() == 0) c.back() = 1;
      if (c.front() == 0) c.front() = 2;
      const IntPolynomial p(c);
      const auto roots = NumericRoots(p);
      bool near_circle = false;
      int inside = 0;
      for (const auto& z : roots) {
        if (std::abs(std::abs(z) - 1.0) < 1e-6) near_circle = true;
        if (std::abs(z) < 1.0) ++inside;
      }
      const auto count = SchurCohnUnitDiskCount(p);
      CHECK(count.inside + count.on_circle + count.outside == p.degree());
      // Outside count through the reciprocal polynomial.
      const auto rev = SchurCohnUnitDiskCount(p.Reversed());
      CHECK(rev.inside == count.outside);
      if (near_circle) continue;
      ++checked;
      CHECK(count.on_circle == 0);
      CHECK(count.inside == inside);
    }
    CHECK(checked > 300);
  }
}

TEST_SUITE("perron") {
  TEST_CASE("minimal polynomial examples") {
    CHECK(MinimalPolynomialOfPerron(IntPolynomial{-1, -1, 1}) == IntPolynomial{-1, -1, 1});
    CHECK(MinimalPolynomialOfPerron(IntPolynomial{2, -3, 1}) == IntPolynomial{-2, 1});
    CHECK(MinimalPolynomialOfPerron(IntPolynomial{-1, -1, -1, 1}) == IntPolynomial{-1, -1, -1, 1});
    // (x^2 - x - 1)(x^2 + 1)
    CHECK(MinimalPolynomialOfPerron(IntPolynomial{-1, -1, 0, -1, 1}) == IntPolynomial{-1, -1, 1});
    CHECK_THROWS_AS(MinimalPolynomialOfPerron(IntPolynomial{0, 0, 0, 0, 0, 1}), UnsupportedError);
  }

  TEST_CASE("factorization multiplies back") {
    const IntPolynomial p{4, 0, -5, 0, 1};  // (x-1)(x+1)(x-2)(x+2)
    const auto f = FactorMonic(p);
    CHECK(f.size() == 4);
    const IntPolynomial q{2, 0, -3, 0, 1};  // (x^2-1)(x^2-2)
    CHECK(FactorMonic(q).size() == 3);
    const IntPolynomial r{6, 0, 5, 0, 1};  // (x^2+2)(x^2+3)
    const auto fr = FactorMonic(r);
    REQUIRE(fr.size() == 2);
  }

  TEST_CASE("characteristic polynomial and largest root") {
    IntMatrix fib(2, 2);
    fib(0, 0) = 1;
    fib(0, 1) = 1;
    fib(1, 0) = 1;
    CHECK(CharacteristicPolynomial(fib) == IntPolynomial{-1, -1, 1});
    CHECK(LargestRealRoot(IntPolynomial{-1, -1, 1}) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(IntPolynomial{-1, -1, 1}.to_string() == "x^2 - x - 1");
  }
}
