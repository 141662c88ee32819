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

#include "meyerion/substitution.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "meyerion/errors.hpp"

namespace meyerion {

std::size_t Substitution1D::index(char letter) const {
  const auto it = std::find(alphabet.begin(), alphabet.end(), letter);
  if (it == alphabet.end()) throw InputError(std::string("unknown letter '") + letter + "'");
  return static_cast<std::size_t>(it - alphabet.begin());
}

std::string Substitution1D::Apply(std::string_view word) const {
  std::string out;
  for (char c : word) out += image(c);
  return out;
}

Substitution1D Substitution1D::Power(unsigned k) const {
  if (k == 0) throw InputError("substitution power must be >= 1");
  Substitution1D out = *this;
  for (unsigned i = 1; i < k; ++i) {
    for (auto& r : out.rules) r = Apply(r);
  }
  return out;
}

std::optional<std::size_t> Substitution1D::constant_length() const {
  if (rules.empty()) return std::nullopt;
  for (const auto& r : rules) {
    if (r.size() != rules.front().size()) return std::nullopt;
  }
  return rules.front().size();
}

std::string Substitution1D::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ',';
    out += alphabet[i];
    out += ':';
    out += rules[i];
  }
  return out;
}

Substitution1D ParseSubstitution(std::string_view text) {
  Substitution1D s;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  if (cleaned.empty()) throw InputError("empty substitution");
  std::stringstream in(cleaned);
  std::string rule;
  while (std::getline(in, rule, ',')) {
    if (rule.size() < 3 || rule[1] != ':') {
      throw InputError("rule '" + rule + "' is not of the form letter:word");
    }
    const std::string word = rule.substr(2);
    for (char c : rule.substr(0, 1) + word) {
      if (!std::isalnum(static_cast<unsigned char>(c))) {
        throw InputError(std::string("letter '") + c + "' is not an ASCII alphanumeric");
      }
    }
    if (std::find(s.alphabet.begin(), s.alphabet.end(), rule[0]) != s.alphabet.end()) {
      throw InputError(std::string("duplicate rule for '") + rule[0] + "'");
    }
    s.alphabet.push_back(rule[0]);
    s.rules.push_back(word);
  }
  if (!cleaned.empty() && cleaned.back() == ',') throw InputError("trailing comma in rules");
  if (s.size() > 64) throw InputError("at most 64 letters are supported");
  for (const auto& r : s.rules) {
    for (char c : r) s.index(c);
  }
  return s;
}

IntMatrix SubstitutionMatrix(const Substitution1D& s) {
  IntMatrix m(s.size(), s.size());
  for (std::size_t b = 0; b < s.size(); ++b) {
    for (char c : s.rules[b]) m(s.index(c), b) += 1;
  }
  return m;
}

Primitivity CheckPrimitivity(const Substitution1D& s) {
  const std::size_t n = s.size();
  const IntMatrix m = SubstitutionMatrix(s);
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n)), power;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) base[i][j] = sgn(m(i, j)) > 0;
  }
  power = base;
  const unsigned bound = static_cast<unsigned>((n - 1) * (n - 1) + 1);
  for (unsigned k = 1; k <= bound; ++k) {
    bool positive = true;
    for (const auto& row : power) positive = positive && std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    if (positive) return {true, k};
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (!power[i][l]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || base[l][j];
      }
    }
    power = std::move(next);
  }
  return {false, 0};
}

namespace {

void RequirePrimitive(const Substitution1D& s) {
  if (!CheckPrimitivity(s).primitive) throw InputError("substitution " + s.to_string() + " is not primitive");
}

}  // namespace

PerronData PerronPisot(const Substitution1D& s) {
  RequirePrimitive(s);
  PerronData d;
  d.characteristic = CharacteristicPolynomial(SubstitutionMatrix(s));
  if (d.characteristic.degree() > 4) {
    throw UnsupportedError("characteristic polynomial of degree " +
                           std::to_string(d.characteristic.degree()) + " (at most 4 supported)");
  }
  d.minimal = MinimalPolynomialOfPerron(d.characteristic);
  d.lambda = LargestRealRoot(d.minimal);
  d.roots = SchurCohnUnitDiskCount(d.minimal);
  d.pisot = d.roots.outside == 1 && d.roots.on_circle == 0 && d.roots.inside == d.minimal.degree() - 1;
  return d;
}

std::size_t ColumnNumber(const Substitution1D& s) {
  const auto q = s.constant_length();
  if (!q) throw UnsupportedError("column number needs a constant-length substitution");
  RequirePrimitive(s);
  const std::uint64_t all = s.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.size()) - 1;
  std::set<std::uint64_t> seen{all};
  std::vector<std::uint64_t> queue{all};
  std::size_t best = s.size();
  while (!queue.empty()) {
    const std::uint64_t set = queue.back();
    queue.pop_back();
    best = std::min<std::size_t>(best, std::popcount(set));
    for (std::size_t j = 0; j < *q; ++j) {
      std::uint64_t next = 0;
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (set >> a & 1u) next |= std::uint64_t{1} << s.index(s.rules[a][j]);
      }
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return best;
}

FixedPointSeed FindFixedPointSeed(const Substitution1D& s) {
  for (unsigned k = 1; k <= s.size(); ++k) {
    const Substitution1D p = s.Power(k);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.rules[i].size() > 1 && p.rules[i].front() == p.alphabet[i]) return {k, p.alphabet[i]};
    }
  }
  throw InputError("no power s^k, k <= " + std::to_string(s.size()) +
                   ", has a letter whose image starts with itself and grows");
}

std::string FixedPointPrefix(const Substitution1D& s, std::size_t length) {
  const FixedPointSeed seed = FindFixedPointSeed(s);
  const Substitution1D p = s.Power(seed.power);
  std::string word(1, seed.letter);
  while (word.size() < length) word = p.Apply(word);
  word.resize(length);
  return word;
}

std::size_t Height(const Substitution1D& s, std::size_t q) {
  const std::string u = FixedPointPrefix(s, 4096);
  std::size_t g = 0;
  for (std::size_t k = 1; k < u.size(); ++k) {
    if (u[k] == u[0]) g = std::gcd(g, k);
  }
  if (g == 0) return 1;
  for (std::size_t p = std::gcd(g, q); p > 1; p = std::gcd(g, q)) g /= p;
  return g;
}

namespace {

// Shortest word r with w = r^k.
std::string PrimitiveRoot(const std::string& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

}  // namespace

AperiodicityProbe ProbeAperiodicity(const Substitution1D& s) {
  for (unsigned k = 1; k <= 6; ++k) {
    const Substitution1D p = s.Power(k);
    const std::string root = PrimitiveRoot(p.rules.front());
    bool common = true;
    for (const auto& r : p.rules) common = common && PrimitiveRoot(r) == root;
    if (common) {
      return {false, "every image of s^" + std::to_string(k) + " is a power of '" + root + "'"};
    }
  }
  const std::size_t length = 1024;
  const std::string u = FixedPointPrefix(s, length);
  for (std::size_t p = 1; p <= length / 4; ++p) {
    bool periodic = true;
    for (std::size_t i = 0; i + p < length && periodic; ++i) periodic = u[i] == u[i + p];
    if (periodic) {
      return {false, "fixed-point prefix of length " + std::to_string(length) + " has period " +
                         std::to_string(p)};
    }
  }
  return {true, "no common root for s^k, k <= 6; no period <= " + std::to_string(length / 4) +
                    " on a fixed-point prefix of length " + std::to_string(length)};
}

LengthMode ParseLengthMode(std::string_view text) {
  if (text == "natural") return LengthMode::kNatural;
  if (text == "unit") return LengthMode::kUnit;
  throw InputError("length mode must be 'natural' or 'unit', got '" + std::string(text) + "'");
}

namespace {

// value = f^2 * d with d square-free (value > 0).
void SplitSquare(std::int64_t value, std::int64_t& f, std::int64_t& d) {
  f = 1;
  d = value;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      f *= p;
    }
  }
}

FieldScalar PerronRoot(const IntPolynomial& minimal) {
  const auto& c = minimal.coefficients();
  if (minimal.degree() == 1) return FieldScalar(mpq_class(-c[0], c[1]));
  if (minimal.degree() != 2) {
    throw UnsupportedError("natural lengths need a Perron root of degree <= 2, got degree " +
                           std::to_string(minimal.degree()));
  }
  const mpz_class disc = c[1] * c[1] - 4 * c[0] * c[2];
  if (!disc.fits_slong_p() || disc <= 0) throw UnsupportedError("discriminant out of range");
  std::int64_t f = 1, d = 1;
  SplitSquare(disc.get_si(), f, d);
  const mpq_class denom(2 * c[2]);
  if (d == 1) return FieldScalar(mpq_class((-c[1] + f) / denom));
  return FieldScalar(mpq_class(-c[1] / denom), mpq_class(f / denom), d);
}

}  // namespace

FieldVector TileLengths(const Substitution1D& s, LengthMode mode) {
  if (mode == LengthMode::kUnit) return FieldVector(s.size(), FieldScalar(1));
  const PerronData perron = PerronPisot(s);
  const FieldScalar lambda = PerronRoot(perron.minimal);
  const IntMatrix m = SubstitutionMatrix(s);
  FieldMatrix a(s.size(), FieldVector(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      a[i][j] = FieldScalar(mpq_class(m(j, i)));
      if (i == j) a[i][j] -= lambda;
    }
  }
  const FieldMatrix kernel = Kernel(a);
  if (kernel.size() != 1) throw InvariantError("Perron eigenspace is not one-dimensional");
  FieldVector v = kernel.front();
  FieldScalar smallest;
  for (const auto& x : v) {
    if (x.sign() == 0 || x.sign() != v.front().sign()) {
      throw InvariantError("Perron eigenvector is not strictly positive");
    }
    if (smallest.is_zero() || Compare(x * FieldScalar(x.sign()), smallest) < 0) {
      smallest = x * FieldScalar(x.sign());
    }
  }
  const FieldScalar scale = FieldScalar(v.front().sign()) / smallest;
  return Scale(scale, v);
}

PointPattern PuncturesFixedPoint(const Substitution1D& s, std::size_t tiles, LengthMode mode,
                                 PunctureRule rule) {
  if (tiles == 0) throw InputError("need at least one tile");
  const FieldVector lengths = TileLengths(s, mode);
  const std::string u = FixedPointPrefix(s, tiles);
  std::vector<FieldVector> points;
  FieldScalar x = 0;
  for (char c : u) {
    const FieldScalar& len = lengths[s.index(c)];
    points.push_back({rule == PunctureRule::kMidpoint ? x + len / FieldScalar(2) : x});
    x += len;
  }
  if (rule == PunctureRule::kMidpoint) {
    x = points.back()[0] + lengths[s.index(u.back())] / FieldScalar(2);
  }
  const FieldScalar half = x / FieldScalar(2);
  return PointPattern(std::move(points), {half}, half,
                      Provenance{s.to_string(), "0",
                                 std::string("punctures, ") +
                                     (mode == LengthMode::kNatural ? "natural" : "unit") +
                                     " lengths, " +
                                     (rule == PunctureRule::kMidpoint ? "mid-points" : "left ends") +
                                     ", " + std::to_string(tiles) + " tiles"});
}

// ---------------------------------------------------------------------------

SpectralReport Classify(const Substitution1D& s, LengthMode mode) {
  SpectralReport r;
  r.rules = s.to_string();
  r.mode = mode;
  r.primitivity = CheckPrimitivity(s);
  r.constant_length = s.constant_length();
  auto say = [&](std::string statement, std::string basis) {
    r.verdicts.push_back({std::move(statement), std::move(basis)});
  };
  if (!r.primitivity.primitive) {
    say("not primitive; no spectral classification", "no power M^k with k <= (|A|-1)^2 + 1 is positive");
    return r;
  }
  r.perron = PerronPisot(s);
  try {
    r.lengths = TileLengths(s, mode);
  } catch (const UnsupportedError& e) {
    say("tile lengths not realized exactly", e.what());
  }
  r.aperiodicity = ProbeAperiodicity(s);
  if (!r.aperiodicity.aperiodic) {
    say("periodic; the hull is a finite orbit and the classification theorems do not apply",
        r.aperiodicity.evidence);
    return r;
  }
  if (r.perron->pisot) {
    r.meyer = true;
    say("Meyer: the punctures form a Meyer set", "Perron root is a Pisot number (Pisot family in one dimension)");
    say("eigenvalue group is dense", "Pisot family <=> Meyer <=> dense eigenvalues");
    say("maximal equicontinuous factor is non-trivial", "Pisot family <=> non-trivial maximal equicontinuous factor");
  } else {
    r.meyer = false;
    r.pure_point = false;
    say("not Meyer (under the expansion hypotheses)", "Perron root is not a Pisot number");
    say("trivial point spectrum: weakly mixing", "no Pisot family <=> trivial eigenvalue group");
    say("maximal equicontinuous factor is trivial", "Pisot family <=> non-trivial maximal equicontinuous factor");
  }
  if (r.constant_length) {
    r.column_number = ColumnNumber(s);
    r.height = Height(s, *r.constant_length);
    if (*r.height > 1) {
      say("coincidence rank unknown: height " + std::to_string(*r.height) + " > 1",
          "column number identified with cr only for height 1");
    } else if (r.perron->pisot) {
      r.coincidence_rank = r.column_number;
      r.pure_point = *r.column_number == 1;
      say("coincidence rank cr = " + std::to_string(*r.column_number),
          "column number of the constant-length substitution (identification validated on "
          "Thue-Morse, cr = 2, and period doubling, cr = 1)");
      say(*r.pure_point ? "pure point dynamical spectrum" : "not pure point",
          "for Meyer substitutions the spectrum is purely discrete iff cr = 1");
    }
  } else {
    say("coincidence rank unknown", "non-constant length");
  }
  return r;
}

nlohmann::json SpectralReport::Json() const {
  nlohmann::json j;
  j["rules"] = rules;
  j["lengths_mode"] = mode == LengthMode::kNatural ? "natural" : "unit";
  j["primitive"] = primitivity.primitive;
  j["primitivity_power"] = primitivity.power;
  j["constant_length"] = constant_length ? nlohmann::json(*constant_length) : nlohmann::json();
  if (perron) {
    j["characteristic_polynomial"] = perron->characteristic.to_string();
    j["perron_minpoly"] = perron->minimal.to_string();
    j["perron_root"] = perron->lambda;
    j["roots_inside_unit_circle"] = perron->roots.inside;
    j["roots_on_unit_circle"] = perron->roots.on_circle;
    j["roots_outside_unit_circle"] = perron->roots.outside;
    j["pisot"] = perron->pisot;
  }
  nlohmann::json lens = nlohmann::json::array();
  for (const auto& l : lengths) lens.push_back(l.to_string());
  j["lengths"] = lens;
  auto opt = [](const auto& o) { return o ? nlohmann::json(*o) : nlohmann::json("unknown"); };
  j["column_number"] = column_number ? nlohmann::json(*column_number) : nlohmann::json();
  j["height"] = height ? nlohmann::json(*height) : nlohmann::json();
  j["aperiodic_probe"] = aperiodicity.aperiodic;
  j["aperiodic_evidence"] = aperiodicity.evidence;
  j["coincidence_rank"] = opt(coincidence_rank);
  j["pure_point"] = opt(pure_point);
  j["meyer"] = opt(meyer);
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : verdicts) vs.push_back({{"statement", v.statement}, {"basis", v.basis}});
  j["verdicts"] = vs;
  return j;
}

std::string SpectralReport::Text() const {
  std::ostringstream out;
  const auto j = Json();
  const std::pair<const char*, const char*> keys[] = {
      {"rules", "rules"},
      {"lengths_mode", "lengths_mode"},
      {"primitive", "primitive"},
      {"primitivity_power", "primitivity_power"},
      {"constant_length", "constant_length"},
      {"characteristic_polynomial", "charpoly"},
      {"perron_minpoly", "perron_minpoly"},
      {"perron_root", "lambda"},
      {"pisot", "pisot"},
      {"lengths", "lengths"},
      {"column_number", "column_number"},
      {"height", "height"},
      {"aperiodic_probe", "aperiodic_probe"},
      {"coincidence_rank", "cr"},
      {"pure_point", "pure_point"},
      {"meyer", "meyer"}};
  for (const auto& [key, label] : keys) {
    if (!j.contains(key)) continue;
    const auto& v = j[key];
    out << label << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  out << "verdicts:\n";
  for (const auto& v : verdicts) out << "  - " << v.statement << " [" << v.basis << "]\n";
  return out.str();
}

}  // namespace meyerion
