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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meyerion {

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), with a
/// and b rational and d a square-free integer >= 2.
///
/// Pure rationals carry discriminant 0 and combine with any field; two
/// scalars with nonzero radical parts must agree on d, otherwise the
/// operation throws InputError. The representation is canonical, so
/// structural equality is numeric equality.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long value) : rational_(value) {}  // NOLINT: implicit by design of literals
  FieldScalar(mpq_class rational);               // NOLINT
  FieldScalar(mpq_class rational, mpq_class radical, std::int64_t discriminant);

  /// sqrt(d) itself.
  static FieldScalar Sqrt(std::int64_t discriminant);

  /// Parses `R` or `R + S*sqrt(D)` (also `R - S*sqrt(D)` and `S*sqrt(D)`).
  /// When expected_discriminant is nonzero, D must equal it.
  static FieldScalar Parse(std::string_view text,
                           std::int64_t expected_discriminant = 0);

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& radical_part() const { return radical_; }
  std::int64_t discriminant() const { return discriminant_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(radical_) == 0; }
  bool is_rational() const { return sgn(radical_) == 0; }

  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const;
  double to_double() const;
  FieldScalar conjugate() const;
  /// a^2 - d b^2.
  mpq_class norm() const;
  /// Largest integer not exceeding the value, decided exactly.
  mpz_class floor() const;

  std::string to_string() const;
  std::size_t hash() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar lhs, const FieldScalar& rhs) { return lhs += rhs; }
  friend FieldScalar operator-(FieldScalar lhs, const FieldScalar& rhs) { return lhs -= rhs; }
  friend FieldScalar operator*(FieldScalar lhs, const FieldScalar& rhs) { return lhs *= rhs; }
  friend FieldScalar operator/(FieldScalar lhs, const FieldScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldScalar& lhs, const FieldScalar& rhs) {
    return lhs.rational_ == rhs.rational_ && lhs.radical_ == rhs.radical_ &&
           lhs.discriminant_ == rhs.discriminant_;
  }
  friend bool operator!=(const FieldScalar& lhs, const FieldScalar& rhs) { return !(lhs == rhs); }

  /// Total order on the representation (rational part first). Cheap; used
  /// for canonical sorting, not for comparing real values.
  static int StructuralCompare(const FieldScalar& lhs, const FieldScalar& rhs);

 private:
  void Normalize();
  std::int64_t MergeDiscriminant(const FieldScalar& rhs) const;

  mpq_class rational_;
  mpq_class radical_;
  std::int64_t discriminant_ = 0;
};

inline int field_sign(const FieldScalar& x) { return x.sign(); }

/// Exact comparison of real values: -1, 0 or +1.
inline int Compare(const FieldScalar& lhs, const FieldScalar& rhs) { return (lhs - rhs).sign(); }

bool IsSquareFree(std::int64_t value);

// ---------------------------------------------------------------------------
// Vectors and matrices over the field.

using FieldVector = std::vector<FieldScalar>;
using FieldMatrix = std::vector<FieldVector>;  // row-major

FieldVector Add(std::span<const FieldScalar> a, std::span<const FieldScalar> b);
FieldVector Subtract(std::span<const FieldScalar> a, std::span<const FieldScalar> b);
FieldVector Scale(const FieldScalar& factor, std::span<const FieldScalar> a);
FieldScalar Dot(std::span<const FieldScalar> a, std::span<const FieldScalar> b);
FieldScalar SquaredNorm(std::span<const FieldScalar> a);
bool IsZeroVector(std::span<const FieldScalar> a);
std::vector<double> ToDoubles(std::span<const FieldScalar> a);
std::string ToString(std::span<const FieldScalar> a);
/// Comma-separated FieldScalars, e.g. "1/5, 1/7" or "1 + 1*sqrt(2), 0".
FieldVector ParseVector(std::string_view text, std::int64_t expected_discriminant = 0);

/// Lexicographic structural order, for canonical point order.
int StructuralCompare(std::span<const FieldScalar> a, std::span<const FieldScalar> b);
std::size_t HashVector(std::span<const FieldScalar> a);

struct FieldVectorHash {
  std::size_t operator()(const FieldVector& v) const { return HashVector(v); }
};

FieldVector MatVec(const FieldMatrix& m, std::span<const FieldScalar> x);
FieldMatrix MatMul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix Transpose(const FieldMatrix& m);
std::size_t Rank(FieldMatrix m);
FieldScalar Determinant(FieldMatrix m);
/// Throws InputError when singular or not square.
FieldMatrix Inverse(FieldMatrix m);
/// Basis (as rows) of the right kernel {x : m x = 0}.
FieldMatrix Kernel(FieldMatrix m);

}  // namespace meyerion
