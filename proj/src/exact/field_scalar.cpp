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

#include "meyerion/field_scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "meyerion/errors.hpp"
#include "meyerion/rational.hpp"

namespace meyerion {

namespace {

std::size_t HashMpz(const mpz_class& value) {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(value.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(value.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    seed ^= static_cast<std::size_t>(mpz_getlimbn(value.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
            (seed << 6) + (seed >> 2);
  }
  return seed;
}

std::size_t HashMpq(const mpq_class& value) {
  std::size_t seed = HashMpz(value.get_num());
  seed ^= HashMpz(value.get_den()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

std::string StripSpaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

bool IsSquareFree(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t p = 2; p * p <= value; ++p) {
    if (value % (p * p) == 0) return false;
  }
  return true;
}

FieldScalar::FieldScalar(mpq_class rational) : rational_(std::move(rational)) {
  rational_.canonicalize();
}

FieldScalar::FieldScalar(mpq_class rational, mpq_class radical, std::int64_t discriminant)
    : rational_(std::move(rational)), radical_(std::move(radical)), discriminant_(discriminant) {
  rational_.canonicalize();
  radical_.canonicalize();
  if (sgn(radical_) != 0 && !IsSquareFree(discriminant_)) {
    throw InputError("discriminant must be a square-free integer >= 2, got " +
                     std::to_string(discriminant_));
  }
  Normalize();
}

FieldScalar FieldScalar::Sqrt(std::int64_t discriminant) {
  return FieldScalar(mpq_class(0), mpq_class(1), discriminant);
}

void FieldScalar::Normalize() {
  if (sgn(radical_) == 0) discriminant_ = 0;
}

std::int64_t FieldScalar::MergeDiscriminant(const FieldScalar& rhs) const {
  if (discriminant_ == 0) return rhs.discriminant_;
  if (rhs.discriminant_ == 0 || rhs.discriminant_ == discriminant_) return discriminant_;
  throw InputError("mixed radicals: sqrt(" + std::to_string(discriminant_) + ") and sqrt(" +
                   std::to_string(rhs.discriminant_) + ")");
}

int FieldScalar::sign() const {
  const int sa = sgn(rational_);
  const int sb = sgn(radical_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d b^2.
  const mpq_class diff = rational_ * rational_ - radical_ * radical_ * discriminant_;
  const int sd = sgn(diff);
  return sa > 0 ? sd : -sd;
}

double FieldScalar::to_double() const {
  if (sgn(radical_) == 0) return rational_.get_d();
  return rational_.get_d() + radical_.get_d() * std::sqrt(static_cast<double>(discriminant_));
}

FieldScalar FieldScalar::conjugate() const {
  FieldScalar out = *this;
  out.radical_ = -out.radical_;
  return out;
}

mpq_class FieldScalar::norm() const {
  return rational_ * rational_ - radical_ * radical_ * discriminant_;
}

mpz_class FieldScalar::floor() const {
  mpz_class guess(std::floor(to_double()));
  while ((*this - FieldScalar(mpq_class(guess))).sign() < 0) guess -= 1;
  while ((*this - FieldScalar(mpq_class(guess + 1))).sign() >= 0) guess += 1;
  return guess;
}

std::string FieldScalar::to_string() const {
  if (sgn(radical_) == 0) return rational_.get_str();
  return rational_.get_str() + " + " + radical_.get_str() + "*sqrt(" +
         std::to_string(discriminant_) + ")";
}

std::size_t FieldScalar::hash() const {
  std::size_t seed = HashMpq(rational_);
  seed ^= HashMpq(radical_) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out = *this;
  out.rational_ = -out.rational_;
  out.radical_ = -out.radical_;
  return out;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  discriminant_ = MergeDiscriminant(rhs);
  rational_ += rhs.rational_;
  radical_ += rhs.radical_;
  Normalize();
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  discriminant_ = MergeDiscriminant(rhs);
  rational_ -= rhs.rational_;
  radical_ -= rhs.radical_;
  Normalize();
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
  const std::int64_t d = MergeDiscriminant(rhs);
  if (sgn(radical_) == 0 && sgn(rhs.radical_) == 0) {
    rational_ *= rhs.rational_;
    return *this;
  }
  mpq_class a = rational_ * rhs.rational_ + radical_ * rhs.radical_ * d;
  mpq_class b = rational_ * rhs.radical_ + radical_ * rhs.rational_;
  rational_ = std::move(a);
  radical_ = std::move(b);
  discriminant_ = d;
  Normalize();
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) {
  if (rhs.is_zero()) throw InputError("division by zero in FieldScalar");
  if (sgn(rhs.radical_) == 0) {
    MergeDiscriminant(rhs);
    rational_ /= rhs.rational_;
    radical_ /= rhs.rational_;
    Normalize();
    return *this;
  }
  const mpq_class n = rhs.norm();
  FieldScalar inv(rhs.rational_ / n, -rhs.radical_ / n, rhs.discriminant_);
  return *this *= inv;
}

int FieldScalar::StructuralCompare(const FieldScalar& lhs, const FieldScalar& rhs) {
  if (int c = cmp(lhs.rational_, rhs.rational_); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(lhs.radical_, rhs.radical_); c != 0) return c < 0 ? -1 : 1;
  if (lhs.discriminant_ != rhs.discriminant_) return lhs.discriminant_ < rhs.discriminant_ ? -1 : 1;
  return 0;
}

FieldScalar FieldScalar::Parse(std::string_view text, std::int64_t expected_discriminant) {
  const std::string s = StripSpaces(text);
  if (s.empty()) throw InputError("empty FieldScalar");
  const auto root = s.find("sqrt(");
  if (root == std::string::npos) return FieldScalar(ParseRational(s));

  const auto close = s.find(')', root);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw InputError("malformed FieldScalar '" + s + "'");
  }
  const std::string d_text = s.substr(root + 5, close - root - 5);
  std::int64_t d = 0;
  try {
    std::size_t used = 0;
    d = std::stoll(d_text, &used);
    if (used != d_text.size()) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("malformed radicand in '" + s + "'");
  }
  if (!IsSquareFree(d)) throw InputError("radicand must be square-free >= 2 in '" + s + "'");
  if (expected_discriminant != 0 && d != expected_discriminant) {
    throw InputError("radicand " + std::to_string(d) + " does not match discriminant " +
                     std::to_string(expected_discriminant));
  }

  std::string coefficient = s.substr(0, root);
  if (!coefficient.empty() && coefficient.back() == '*') coefficient.pop_back();

  // Split "R+S" / "R-S" at the last binary sign (one preceded by a digit).
  std::string rational_text;
  std::string radical_text = coefficient;
  for (std::size_t i = coefficient.size(); i-- > 1;) {
    const char c = coefficient[i];
    if ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(coefficient[i - 1]))) {
      rational_text = coefficient.substr(0, i);
      radical_text = coefficient.substr(c == '+' ? i + 1 : i);
      break;
    }
  }
  if (radical_text.size() >= 2 && radical_text[0] == '-' &&
      (radical_text[1] == '-' || radical_text[1] == '+')) {
    radical_text = (radical_text[1] == '-' ? "" : "-") + radical_text.substr(2);
  }
  if (!radical_text.empty() && radical_text[0] == '+') radical_text.erase(0, 1);
  mpq_class radical;
  if (radical_text.empty()) {
    radical = 1;
  } else if (radical_text == "-") {
    radical = -1;
  } else {
    radical = ParseRational(radical_text);
  }
  const mpq_class rational = rational_text.empty() ? mpq_class(0) : ParseRational(rational_text);
  return FieldScalar(rational, radical, d);
}

// ---------------------------------------------------------------------------

FieldVector Add(std::span<const FieldScalar> a, std::span<const FieldScalar> b) {
  if (a.size() != b.size()) throw InputError("vector dimension mismatch");
  FieldVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

FieldVector Subtract(std::span<const FieldScalar> a, std::span<const FieldScalar> b) {
  if (a.size() != b.size()) throw InputError("vector dimension mismatch");
  FieldVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

FieldVector Scale(const FieldScalar& factor, std::span<const FieldScalar> a) {
  FieldVector out(a.begin(), a.end());
  for (auto& x : out) x *= factor;
  return out;
}

FieldScalar Dot(std::span<const FieldScalar> a, std::span<const FieldScalar> b) {
  if (a.size() != b.size()) throw InputError("vector dimension mismatch");
  FieldScalar sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

FieldScalar SquaredNorm(std::span<const FieldScalar> a) { return Dot(a, a); }

bool IsZeroVector(std::span<const FieldScalar> a) {
  return std::all_of(a.begin(), a.end(), [](const FieldScalar& x) { return x.is_zero(); });
}

std::vector<double> ToDoubles(std::span<const FieldScalar> a) {
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x.to_double());
  return out;
}

std::string ToString(std::span<const FieldScalar> a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i].to_string();
  }
  return out;
}

FieldVector ParseVector(std::string_view text, std::int64_t expected_discriminant) {
  FieldVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(FieldScalar::Parse(text.substr(start, comma - start), expected_discriminant));
    start = comma + 1;
  }
  return out;
}

int StructuralCompare(std::span<const FieldScalar> a, std::span<const FieldScalar> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = FieldScalar::StructuralCompare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::size_t HashVector(std::span<const FieldScalar> a) {
  std::size_t seed = a.size();
  for (const auto& x : a) seed ^= x.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

FieldVector MatVec(const FieldMatrix& m, std::span<const FieldScalar> x) {
  FieldVector out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(Dot(row, x));
  return out;
}

FieldMatrix MatMul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  FieldMatrix out(a.size(), FieldVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InputError("matrix dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

FieldMatrix Transpose(const FieldMatrix& m) {
  if (m.empty()) return {};
  FieldMatrix out(m[0].size(), FieldVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> RowReduce(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const FieldScalar inv = FieldScalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldScalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t Rank(FieldMatrix m) { return RowReduce(m).size(); }

FieldScalar Determinant(FieldMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  }
  FieldScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return FieldScalar(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const FieldScalar inv = FieldScalar(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const FieldScalar f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

FieldMatrix Inverse(FieldMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("inverse of a non-square matrix");
    m[i].resize(2 * n);
    m[i][n + i] = FieldScalar(1);
  }
  const auto pivots = RowReduce(m);
  if (pivots.size() < n || pivots.back() >= n) throw InputError("matrix is singular");
  FieldMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

FieldMatrix Kernel(FieldMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = RowReduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  FieldMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(cols);
    v[free] = FieldScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace meyerion
