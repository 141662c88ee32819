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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "meyerion/lattice.hpp"
#include "meyerion/point_pattern.hpp"
#include "meyerion/polynomial.hpp"

namespace meyerion {

/// A substitution on single-character letters.
struct Substitution1D {
  std::vector<char> alphabet;      // in rule order
  std::vector<std::string> rules;  // rules[i] is the image of alphabet[i]

  std::size_t size() const { return alphabet.size(); }
  /// Index of a letter; InputError when absent.
  std::size_t index(char letter) const;
  const std::string& image(char letter) const { return rules[index(letter)]; }
  std::string Apply(std::string_view word) const;
  /// s^k (k >= 1).
  Substitution1D Power(unsigned k) const;
  /// Common image length, if every image has the same length.
  std::optional<std::size_t> constant_length() const;
  std::string to_string() const;  // "a:ab,b:a"
};

/// Parses comma-separated `letter:word` rules; letters are ASCII
/// alphanumerics. InputError on malformed, duplicate or dangling letters.
Substitution1D ParseSubstitution(std::string_view text);

/// M[a][b] = number of occurrences of letter a in the image of b.
IntMatrix SubstitutionMatrix(const Substitution1D& s);

struct Primitivity {
  bool primitive = false;
  unsigned power = 0;  // least k with M^k > 0 (0 when not primitive)
};

/// Positivity of M^k for some k <= (|A| - 1)^2 + 1.
Primitivity CheckPrimitivity(const Substitution1D& s);

struct PerronData {
  IntPolynomial characteristic;
  IntPolynomial minimal;  // of the Perron root
  double lambda = 0;
  UnitDiskCount roots;    // of the minimal polynomial
  bool pisot = false;
};

/// InputError when s is not primitive; UnsupportedError when the
/// characteristic polynomial has degree > 4.
PerronData PerronPisot(const Substitution1D& s);

/// Minimum cardinality over the sets reachable from the alphabet under
/// S -> {j-th letter of rules(a) : a in S}. UnsupportedError for
/// non-constant-length input; InputError when not primitive.
std::size_t ColumnNumber(const Substitution1D& s);

/// A power s^k (k <= |A|) with a letter whose image starts with itself.
struct FixedPointSeed {
  unsigned power = 0;
  char letter = 0;
};
/// InputError when no such power exists.
FixedPointSeed FindFixedPointSeed(const Substitution1D& s);

/// First `length` letters of the one-sided fixed point.
std::string FixedPointPrefix(const Substitution1D& s, std::size_t length);

/// Largest n coprime to q dividing the gcd of the return positions of the
/// first letter (probed on a fixed-point prefix).
std::size_t Height(const Substitution1D& s, std::size_t q);

struct AperiodicityProbe {
  bool aperiodic = true;  // no periodicity detected
  std::string evidence;
};
/// Checks s^k for k <= 6 for images that are all powers of one word, and a
/// fixed-point prefix for small periods. Evidence only, not a proof.
AperiodicityProbe ProbeAperiodicity(const Substitution1D& s);

enum class LengthMode { kNatural, kUnit };
LengthMode ParseLengthMode(std::string_view text);

/// Tile lengths: unit, or the left Perron eigenvector scaled so that its
/// smallest entry is 1 (exact only for a Perron root of degree <= 2;
/// UnsupportedError otherwise).
FieldVector TileLengths(const Substitution1D& s, LengthMode mode);

enum class PunctureRule { kMidpoint, kLeftEndpoint };

/// Punctures of the first `tiles` tiles of the fixed point, laid out from 0.
PointPattern PuncturesFixedPoint(const Substitution1D& s, std::size_t tiles, LengthMode mode,
                                 PunctureRule rule = PunctureRule::kMidpoint);

struct Verdict {
  std::string statement;
  std::string basis;
};

struct SpectralReport {
  std::string rules;
  LengthMode mode = LengthMode::kNatural;
  Primitivity primitivity;
  std::optional<std::size_t> constant_length;
  std::optional<PerronData> perron;
  FieldVector lengths;  // empty when not realizable exactly
  std::optional<std::size_t> column_number;
  std::optional<std::size_t> height;
  AperiodicityProbe aperiodicity;
  std::optional<std::size_t> coincidence_rank;  // empty means unknown
  std::optional<bool> pure_point;               // empty means unknown
  std::optional<bool> meyer;
  std::vector<Verdict> verdicts;

  nlohmann::json Json() const;
  std::string Text() const;
};

SpectralReport Classify(const Substitution1D& s, LengthMode mode = LengthMode::kNatural);

}  // namespace meyerion
