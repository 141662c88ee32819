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

#include "meyerion/lattice.hpp"

#include <utility>

#include "meyerion/errors.hpp"
#include "meyerion/rational.hpp"

namespace meyerion {

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("IntMatrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// Replaces rows (r, i) of both matrices by the unimodular combination
// [[x, y], [-b/g, a/g]] applied to them.
void CombineRows(IntMatrix& m, std::size_t r, std::size_t i, const mpz_class& x,
                 const mpz_class& y, const mpz_class& p, const mpz_class& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    mpz_class top = x * m(r, c) + y * m(i, c);
    mpz_class bottom = p * m(r, c) + q * m(i, c);
    m(r, c) = std::move(top);
    m(i, c) = std::move(bottom);
  }
}

void AddRowMultiple(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += f * m(source, c);
}

void NegateRow(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void SwapRows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

HermiteForm HermiteNormalForm(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::Identity(a.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    std::size_t first = r;
    while (first < h.rows() && h(first, c) == 0) ++first;
    if (first == h.rows()) continue;
    if (first != r) {
      SwapRows(h, first, r);
      SwapRows(u, first, r);
    }
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(i, c).get_mpz_t());
      const mpz_class p = -h(i, c) / g;
      const mpz_class q = h(r, c) / g;
      CombineRows(h, r, i, x, y, p, q);
      CombineRows(u, r, i, x, y, p, q);
    }
    if (h(r, c) < 0) {
      NegateRow(h, r);
      NegateRow(u, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      const mpz_class f = -FloorDiv(h(k, c), h(r, c));
      if (f == 0) continue;
      AddRowMultiple(h, k, r, f);
      AddRowMultiple(u, k, r, f);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

mpz_class IntDeterminant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of a non-square matrix");
  IntMatrix m = input;
  const std::size_t n = m.rows();
  mpz_class sign = 1;
  mpz_class previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      SwapRows(m, p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Stacks generators as rows, scaled to integers by the common LCM of every
// denominator (including the target's when given).
IntMatrix ScaledRows(std::span<const RationalVector> generators, std::span<const mpq_class> target,
                     std::size_t dim, mpz_class& scale) {
  scale = 1;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InputError("generator dimension mismatch");
    for (mpq_class x : g) {
      x.canonicalize();
      scale = Lcm(scale, x.get_den());
    }
  }
  for (mpq_class x : target) {
    x.canonicalize();
    scale = Lcm(scale, x.get_den());
  }
  IntMatrix m(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      mpq_class v = generators[i][j];
      v.canonicalize();
      v *= scale;
      m(i, j) = v.get_num();
    }
  }
  return m;
}

}  // namespace

LatticeMembership HnfMembership(std::span<const RationalVector> generators,
                                std::span<const mpq_class> target) {
  const std::size_t dim = target.size();
  mpz_class scale;
  const IntMatrix a = ScaledRows(generators, target, dim, scale);
  IntVector residual(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    mpq_class v = target[j];
    v.canonicalize();
    v *= scale;
    residual[j] = v.get_num();
  }
  const HermiteForm hf = HermiteNormalForm(a);
  IntVector x(hf.rank);
  for (std::size_t r = 0; r < hf.rank; ++r) {
    const std::size_t c = hf.pivot_columns[r];
    if (!mpz_divisible_p(residual[c].get_mpz_t(), hf.h(r, c).get_mpz_t())) return {};
    x[r] = residual[c] / hf.h(r, c);
    for (std::size_t j = c; j < dim; ++j) residual[j] -= x[r] * hf.h(r, j);
  }
  for (const auto& v : residual) {
    if (v != 0) return {};
  }
  LatticeMembership out{true, IntVector(generators.size())};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t r = 0; r < hf.rank; ++r) out.coefficients[i] += x[r] * hf.u(r, i);
  }
  return out;
}

std::vector<IntVector> IntegerRelations(std::span<const RationalVector> generators) {
  if (generators.empty()) return {};
  const std::size_t dim = generators[0].size();
  mpz_class scale;
  const IntMatrix a = ScaledRows(generators, {}, dim, scale);
  const HermiteForm hf = HermiteNormalForm(a);
  std::vector<IntVector> out;
  for (std::size_t r = hf.rank; r < a.rows(); ++r) out.push_back(hf.u.row(r));
  return out;
}

RationalVector RationalCoordinates(std::span<const FieldScalar> v) {
  RationalVector out;
  out.reserve(2 * v.size());
  for (const auto& x : v) {
    out.push_back(x.rational_part());
    out.push_back(x.radical_part());
  }
  return out;
}

}  // namespace meyerion
