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
#include <span>
#include <vector>

#include "meyerion/field_scalar.hpp"

namespace meyerion {

using IntVector = std::vector<mpz_class>;
using RationalVector = std::vector<mpq_class>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

/// Row-style Hermite normal form: h = u * a with u unimodular. The first
/// `rank` rows of h are in echelon form with positive pivots and entries
/// above each pivot reduced into [0, pivot); the remaining rows are zero.
/// (Equivalently, the column-style form of the generators-as-columns matrix.)
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm HermiteNormalForm(const IntMatrix& a);

/// Determinant by fraction-free elimination (Bareiss).
mpz_class IntDeterminant(const IntMatrix& a);

struct LatticeMembership {
  bool member = false;
  /// Integer coefficients c with sum_i c_i * generators[i] == target.
  IntVector coefficients;
};

/// Decides whether `target` lies in the Z-span of `generators` in Q^m.
/// Denominators are cleared by their LCM before the HNF is taken.
/// Throws InputError on dimension mismatch.
LatticeMembership HnfMembership(std::span<const RationalVector> generators,
                                std::span<const mpq_class> target);

/// Basis of the integer relations {c in Z^k : sum_i c_i * generators[i] = 0}.
std::vector<IntVector> IntegerRelations(std::span<const RationalVector> generators);

/// Coordinates of a field vector in Q^(2m): rational and radical parts
/// interleaved per component.
RationalVector RationalCoordinates(std::span<const FieldScalar> v);

}  // namespace meyerion
