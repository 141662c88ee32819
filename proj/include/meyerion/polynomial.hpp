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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "meyerion/lattice.hpp"

namespace meyerion {

/// Integer polynomial, coefficients from the constant term upward. The
/// leading coefficient is nonzero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  const mpz_class& leading() const { return coefficients_.back(); }

  double Evaluate(double x) const;
  /// x^deg p(1/x).
  IntPolynomial Reversed() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<mpz_class> coefficients_;
};

/// Rational polynomial used internally for exact gcd/Sturm computations.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coefficients);
  explicit RatPolynomial(const IntPolynomial& p);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<mpq_class>& coefficients() const { return coefficients_; }
  const mpq_class& leading() const { return coefficients_.back(); }

  mpq_class Evaluate(const mpq_class& x) const;
  RatPolynomial Derivative() const;
  RatPolynomial Monic() const;
  RatPolynomial Reversed() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  /// Euclidean division; throws on a zero divisor.
  static void DivMod(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& quotient,
                     RatPolynomial& remainder);
  static RatPolynomial Gcd(RatPolynomial a, RatPolynomial b);  // monic

 private:
  void Trim();
  std::vector<mpq_class> coefficients_;
};

/// Number of distinct real roots in the half-open interval (lo, hi].
int SturmCount(const RatPolynomial& p, const mpq_class& lo, const mpq_class& hi);

/// Square-free decomposition p = c * prod_i f_i^i; entry i-1 holds f_i.
std::vector<RatPolynomial> SquareFreeDecomposition(const RatPolynomial& p);

struct UnitDiskCount {
  int inside = 0;     // |z| < 1, with multiplicity
  int on_circle = 0;  // |z| == 1, with multiplicity
  int outside = 0;    // |z| > 1, with multiplicity
  bool roots_on_circle() const { return on_circle > 0; }
};

/// Exact root location relative to the unit circle. The factor sharing roots
/// with the reciprocal polynomial carries every unit-circle root and is
/// counted through x = z + 1/z; the remainder is counted from the inertia of
/// its Schur-Cohn matrix. Throws InputError for the zero polynomial.
UnitDiskCount SchurCohnUnitDiskCount(const IntPolynomial& p);

/// Characteristic polynomial det(xI - M) of a square integer matrix.
IntPolynomial CharacteristicPolynomial(const IntMatrix& m);

/// Monic irreducible factors over Q (with repetition) of a monic integer
/// polynomial of degree <= 4. Throws UnsupportedError beyond degree 4.
std::vector<IntPolynomial> FactorMonic(const IntPolynomial& p);

/// Monic irreducible factor of `charpoly` vanishing at its largest real
/// root (the Perron root for a primitive nonnegative matrix).
IntPolynomial MinimalPolynomialOfPerron(const IntPolynomial& charpoly);

/// Largest real root to double precision (isolated exactly, then bisected).
double LargestRealRoot(const IntPolynomial& p);

}  // namespace meyerion
