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

#include "meyerion/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "meyerion/errors.hpp"

namespace meyerion {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

double IntPolynomial::Evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::Reversed() const {
  std::vector<mpz_class> c(coefficients_.rbegin(), coefficients_.rend());
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1 || k == 0) out += a.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<mpq_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  Trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
  for (const auto& c : p.coefficients()) coefficients_.emplace_back(c);
  Trim();
}

void RatPolynomial::Trim() {
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

mpq_class RatPolynomial::Evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPolynomial RatPolynomial::Derivative() const {
  std::vector<mpq_class> c;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    c.push_back(coefficients_[k] * static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::Monic() const {
  if (is_zero()) return *this;
  std::vector<mpq_class> c = coefficients_;
  const mpq_class lead = c.back();
  for (auto& x : c) x /= lead;
  return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::Reversed() const {
  return RatPolynomial(std::vector<mpq_class>(coefficients_.rbegin(), coefficients_.rend()));
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] -= b.coefficients_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return RatPolynomial(std::move(c));
}

void RatPolynomial::DivMod(const RatPolynomial& a, const RatPolynomial& b, RatPolynomial& quotient,
                           RatPolynomial& remainder) {
  if (b.is_zero()) throw InvariantError("polynomial division by zero");
  std::vector<mpq_class> r = a.coefficients_;
  const int db = b.degree();
  std::vector<mpq_class> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    const mpq_class f = r[static_cast<std::size_t>(k)] / b.leading();
    q[static_cast<std::size_t>(k - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= f * b.coefficients_[static_cast<std::size_t>(j)];
    }
  }
  quotient = RatPolynomial(std::move(q));
  remainder = RatPolynomial(std::move(r));
}

RatPolynomial RatPolynomial::Gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial q, r;
    DivMod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

namespace {

RatPolynomial Quotient(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial q, r;
  RatPolynomial::DivMod(a, b, q, r);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

int SignVariations(const std::vector<RatPolynomial>& chain, const mpq_class& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.Evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int SturmCount(const RatPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.degree() <= 0) return 0;
  std::vector<RatPolynomial> chain{p, p.Derivative()};
  while (!chain.back().is_zero()) {
    RatPolynomial q, r;
    RatPolynomial::DivMod(chain[chain.size() - 2], chain.back(), q, r);
    chain.push_back(RatPolynomial() - r);
  }
  chain.pop_back();
  return SignVariations(chain, lo) - SignVariations(chain, hi);
}

std::vector<RatPolynomial> SquareFreeDecomposition(const RatPolynomial& p) {
  std::vector<RatPolynomial> out;
  if (p.degree() <= 0) return out;
  const RatPolynomial dp = p.Derivative();
  const RatPolynomial a0 = RatPolynomial::Gcd(p, dp);
  RatPolynomial b = Quotient(p, a0);
  RatPolynomial c = Quotient(dp, a0);
  RatPolynomial d = c - b.Derivative();
  while (b.degree() > 0) {
    const RatPolynomial a = RatPolynomial::Gcd(b, d);
    out.push_back(a);
    b = Quotient(b, a);
    c = Quotient(d, a);
    d = c - b.Derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unit-circle root location

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

// Faddeev-LeVerrier; returns coefficients of det(xI - A), constant first.
std::vector<mpq_class> CharPolyRational(const RatMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, std::vector<mpq_class>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * m + c[n-k+1] * I
    RatMatrix next(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(a[i][l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    mpq_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

// Roots of h inside the unit disk, for h coprime to its reciprocal: the
// number of negative eigenvalues of S = M1^T M1 - M2^T M2.
int InsideCountCoprime(const RatPolynomial& h) {
  const int n = h.degree();
  if (n <= 0) return 0;
  const auto& a = h.coefficients();
  const auto un = static_cast<std::size_t>(n);
  RatMatrix m1(un, std::vector<mpq_class>(un));
  RatMatrix m2(un, std::vector<mpq_class>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      m1[i][j] = a[i - j];
      m2[i][j] = a[un - i + j];
    }
  }
  RatMatrix s(un, std::vector<mpq_class>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      for (std::size_t k = 0; k < un; ++k) s[i][j] += m1[k][i] * m1[k][j] - m2[k][i] * m2[k][j];
    }
  }
  // Eigenvalues are real; Descartes on chi(-x) counts negative ones exactly.
  std::vector<mpq_class> chi = CharPolyRational(s);
  if (sgn(chi[0]) == 0) throw InvariantError("Schur-Cohn matrix is singular for a coprime factor");
  int variations = 0;
  int last = 0;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    const int sgn_k = sgn(chi[k]) * ((k % 2 == 1) ? -1 : 1);
    if (sgn_k == 0) continue;
    if (last != 0 && sgn_k != last) ++variations;
    last = sgn_k;
  }
  return variations;
}

// For palindromic g of even degree 2s, returns G with g(z) = z^s G(z + 1/z).
RatPolynomial PalindromicReduction(const RatPolynomial& g) {
  const auto& c = g.coefficients();
  const std::size_t s = c.size() / 2;
  // D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}
  const RatPolynomial x(std::vector<mpq_class>{0, 1});
  RatPolynomial previous(std::vector<mpq_class>{2});
  RatPolynomial current = x;
  RatPolynomial out(std::vector<mpq_class>{c[s]});
  for (std::size_t j = 1; j <= s; ++j) {
    out = out + RatPolynomial(std::vector<mpq_class>{c[s + j]}) * current;
    RatPolynomial next = x * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return out;
}

}  // namespace

UnitDiskCount SchurCohnUnitDiskCount(const IntPolynomial& p) {
  if (p.is_zero()) throw InputError("unit-disk count of the zero polynomial");
  UnitDiskCount out;
  std::vector<mpq_class> c;
  {
    std::size_t low = 0;
    while (p.coefficients()[low] == 0) ++low;
    out.inside += static_cast<int>(low);
    for (std::size_t k = low; k < p.coefficients().size(); ++k) c.emplace_back(p.coefficients()[k]);
  }
  RatPolynomial q(std::move(c));
  for (const long root : {1L, -1L}) {
    const RatPolynomial linear(std::vector<mpq_class>{-root, 1});
    while (q.degree() > 0 && sgn(q.Evaluate(root)) == 0) {
      q = Quotient(q, linear);
      ++out.on_circle;
    }
  }
  const RatPolynomial g = RatPolynomial::Gcd(q, q.Reversed());
  const RatPolynomial h = Quotient(q, g);
  if (g.degree() > 0) {
    if (g.degree() % 2 != 0 || !(g.Reversed().Monic() == g)) {
      throw InvariantError("reciprocal gcd is not palindromic");
    }
    int circle_pairs = 0;
    const auto parts = SquareFreeDecomposition(PalindromicReduction(g));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      circle_pairs += static_cast<int>(i + 1) * SturmCount(parts[i], mpq_class(-2), mpq_class(2));
    }
    out.on_circle += 2 * circle_pairs;
    out.inside += (g.degree() - 2 * circle_pairs) / 2;
  }
  out.inside += InsideCountCoprime(h);
  out.outside = p.degree() - out.inside - out.on_circle;
  return out;
}

IntPolynomial CharacteristicPolynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  RatMatrix a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  }
  std::vector<mpz_class> out;
  for (const auto& x : CharPolyRational(a)) {
    if (x.get_den() != 1) throw InvariantError("non-integer characteristic coefficient");
    out.push_back(x.get_num());
  }
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Factorization and the Perron factor

namespace {

std::vector<mpz_class> Divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  const mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact monic division; returns false when the remainder is nonzero.
bool DivideMonic(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                 std::vector<mpz_class>& quotient) {
  std::vector<mpz_class> r = a;
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return false;
  quotient.assign(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpz_class f = r[k];
    quotient[k - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

std::vector<IntPolynomial> FactorMonic(const IntPolynomial& p) {
  if (p.is_zero() || p.leading() != 1) throw InputError("FactorMonic needs a monic polynomial");
  if (p.degree() > 4) {
    throw UnsupportedError("integer factorization is implemented up to degree 4, got degree " +
                           std::to_string(p.degree()));
  }
  std::vector<IntPolynomial> factors;
  std::vector<mpz_class> rest = p.coefficients();
  while (rest.size() > 1 && rest[0] == 0) {
    factors.push_back(IntPolynomial{0, 1});
    rest.erase(rest.begin());
  }
  if (rest.size() > 1) {
    for (const auto& d : Divisors(rest[0])) {
      for (const mpz_class& root : {d, mpz_class(-d)}) {
        std::vector<mpz_class> q;
        while (rest.size() > 1 && DivideMonic(rest, {-root, 1}, q)) {
          factors.push_back(IntPolynomial(std::vector<mpz_class>{-root, 1}));
          rest = q;
        }
      }
    }
  }
  if (rest.size() == 5) {
    mpz_class bound = 0;
    for (const auto& x : rest) bound = std::max(bound, mpz_class(abs(x)));
    bound += 1;
    for (const auto& d : Divisors(rest[0])) {
      if (d > bound * bound) break;
      for (const mpz_class& c : {d, mpz_class(-d)}) {
        for (mpz_class b = -2 * bound; b <= 2 * bound; ++b) {
          std::vector<mpz_class> q;
          if (DivideMonic(rest, {c, b, 1}, q)) {
            factors.push_back(IntPolynomial(std::vector<mpz_class>{c, b, 1}));
            factors.push_back(IntPolynomial(q));
            rest = {1};
            break;
          }
        }
        if (rest.size() == 1) break;
      }
      if (rest.size() == 1) break;
    }
  }
  if (rest.size() > 1) factors.push_back(IntPolynomial(rest));
  return factors;
}

namespace {

mpq_class CauchyBound(const RatPolynomial& p) {
  mpq_class m = 0;
  for (const auto& c : p.coefficients()) m = std::max(m, mpq_class(abs(c)));
  return 1 + m / abs(p.leading());
}

// Interval (lo, hi] containing the largest real root of p and no other root.
std::pair<mpq_class, mpq_class> IsolateLargestRoot(const RatPolynomial& p) {
  const RatPolynomial s = Quotient(p, RatPolynomial::Gcd(p, p.Derivative()));
  mpq_class hi = CauchyBound(s);
  mpq_class lo = -hi;
  if (SturmCount(s, lo, hi) == 0) throw InputError("polynomial has no real root");
  while (SturmCount(s, lo, hi) > 1) {
    mpq_class mid = (lo + hi) / 2;
    if (SturmCount(s, mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace

IntPolynomial MinimalPolynomialOfPerron(const IntPolynomial& charpoly) {
  if (charpoly.is_zero() || charpoly.leading() != 1) {
    throw InputError("characteristic polynomial must be monic");
  }
  const auto [lo, hi] = IsolateLargestRoot(RatPolynomial(charpoly));
  for (const auto& f : FactorMonic(charpoly)) {
    if (SturmCount(RatPolynomial(f), lo, hi) >= 1) return f;
  }
  throw InvariantError("no irreducible factor vanishes at the largest real root");
}

double LargestRealRoot(const IntPolynomial& p) {
  const RatPolynomial rp(p);
  auto [lo, hi] = IsolateLargestRoot(rp);
  const RatPolynomial s = Quotient(rp, RatPolynomial::Gcd(rp, rp.Derivative()));
  for (int i = 0; i < 80; ++i) {
    mpq_class mid = (lo + hi) / 2;
    if (SturmCount(s, mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi.get_d();
}

}  // namespace meyerion
