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

#include "meyerion/rational.hpp"

#include <cctype>

#include "meyerion/errors.hpp"

namespace meyerion {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

mpq_class ParseRational(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  mpq_class out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) throw InputError("malformed rational '" + s + "'");
    const mpz_class d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    out = mpq_class(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !AllDigits(whole)) || (!frac.empty() && !AllDigits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw InputError("malformed decimal '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num(whole.empty() ? std::string("0") : std::string(whole));
    num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(std::string(frac)));
    out = mpq_class(num, scale);
  } else {
    if (!AllDigits(body)) throw InputError("malformed rational '" + s + "'");
    out = mpq_class(mpz_class(std::string(body)));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

}  // namespace meyerion
