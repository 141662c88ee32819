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

#include "meyerion/errors.hpp"
#include "meyerion/model_set.hpp"
#include "meyerion/substitution.hpp"
#include "test_support.hpp"

using namespace meyerion;

namespace {

const char* kFibonacci = "a:ab,b:a";
const char* kThueMorse = "0:01,1:10";
const char* kPeriodDoubling = "a:ab,b:aa";
const char* kNonPisot = "a:abbb,b:a";

FieldScalar Phi() { return FieldScalar(mpq_class(1, 2), mpq_class(1, 2), 5); }

IntMatrix Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("substitution basics") {
  TEST_CASE("parsing") {
    const auto s = ParseSubstitution(" a:ab , b:a ");
    CHECK(s.to_string() == "a:ab,b:a");
    CHECK(s.Apply("aba") == "abaab");
    CHECK(s.Power(3).image('a') == "abaab");
    CHECK_FALSE(s.constant_length());
    CHECK(ParseSubstitution(kThueMorse).constant_length() == 2u);
    for (const char* bad : {"", "a:ab,a:b", "a:ac", "ab:a", "a:", "a-b", "a:ab,", "a:a!"}) {
      CHECK_THROWS_AS(ParseSubstitution(bad), InputError);
    }
  }

  TEST_CASE("matrix and primitivity") {
    CHECK(SubstitutionMatrix(ParseSubstitution(kFibonacci)) == Matrix({{1, 1}, {1, 0}}));
    CHECK(SubstitutionMatrix(ParseSubstitution(kThueMorse)) == Matrix({{1, 1}, {1, 1}}));
    const auto fib = CheckPrimitivity(ParseSubstitution(kFibonacci));
    CHECK(fib.primitive);
    CHECK(fib.power == 2);
    CHECK(CheckPrimitivity(ParseSubstitution(kThueMorse)).power == 1);
    CHECK_FALSE(CheckPrimitivity(ParseSubstitution("a:a,b:b")).primitive);
    CHECK_FALSE(CheckPrimitivity(ParseSubstitution("a:ab,b:b")).primitive);
    // Wielandt's bound is attained.
    const auto w = CheckPrimitivity(ParseSubstitution("a:b,b:c,c:ab"));
    CHECK(w.primitive);
    CHECK(w.power == 5);
  }

  TEST_CASE("Perron data") {
    const auto fib = PerronPisot(ParseSubstitution(kFibonacci));
    CHECK(fib.minimal == IntPolynomial{-1, -1, 1});
    CHECK(fib.pisot);
    CHECK(fib.lambda == doctest::Approx(1.6180339887));
    const auto np = PerronPisot(ParseSubstitution(kNonPisot));
    CHECK(np.minimal == IntPolynomial{-3, -1, 1});
    CHECK_FALSE(np.pisot);
    CHECK(np.roots.outside == 2);
    const auto two = PerronPisot(ParseSubstitution("a:aa"));
    CHECK(two.minimal == IntPolynomial{-2, 1});
    CHECK(two.pisot);
    const auto tm = PerronPisot(ParseSubstitution(kThueMorse));
    CHECK(tm.characteristic == IntPolynomial{0, -2, 1});
    CHECK(tm.minimal == IntPolynomial{-2, 1});
    CHECK(tm.pisot);
    CHECK_THROWS_AS(PerronPisot(ParseSubstitution("a:a,b:b")), InputError);
    CHECK_THROWS_AS(PerronPisot(ParseSubstitution("a:ab,b:c,c:d,d:e,e:a")), UnsupportedError);
    // Tribonacci: a cubic Pisot number.
    CHECK(PerronPisot(ParseSubstitution("a:ab,b:ac,c:a")).pisot);
  }

  TEST_CASE("Pisot flag is stable under squaring") {
    for (const char* rules : {kFibonacci, kThueMorse, kPeriodDoubling, kNonPisot, "a:ab,b:ac,c:a"}) {
      const auto s = ParseSubstitution(rules);
      CHECK(PerronPisot(s).pisot == PerronPisot(s.Power(2)).pisot);
    }
  }

  TEST_CASE("column number") {
    CHECK(ColumnNumber(ParseSubstitution(kThueMorse)) == 2);
    CHECK(ColumnNumber(ParseSubstitution(kPeriodDoubling)) == 1);
    CHECK(ColumnNumber(ParseSubstitution("a:ab,b:ac,c:ab")) == 1);
    for (const char* rules : {kThueMorse, kPeriodDoubling}) {
      const auto s = ParseSubstitution(rules);
      CHECK(ColumnNumber(s) == ColumnNumber(s.Power(2)));
    }
    CHECK_THROWS_AS(ColumnNumber(ParseSubstitution(kFibonacci)), UnsupportedError);
  }

  TEST_CASE("height and aperiodicity") {
    CHECK(Height(ParseSubstitution(kThueMorse), 2) == 1);
    CHECK(Height(ParseSubstitution(kPeriodDoubling), 2) == 1);
    CHECK(Height(ParseSubstitution("a:abc,b:bca,c:cab"), 3) == 1);
    // a only at even positions.
    CHECK(Height(ParseSubstitution("a:aba,b:bab"), 3) == 2);
    CHECK(Height(ParseSubstitution("a:abcb,b:cbab,c:abcb"), 4) == 1);
    CHECK(ProbeAperiodicity(ParseSubstitution(kThueMorse)).aperiodic);
    CHECK(ProbeAperiodicity(ParseSubstitution(kFibonacci)).aperiodic);
    CHECK_FALSE(ProbeAperiodicity(ParseSubstitution("a:ab,b:ab")).aperiodic);
    CHECK_FALSE(ProbeAperiodicity(ParseSubstitution("a:aa")).aperiodic);
  }
}

TEST_SUITE("punctures") {
  TEST_CASE("natural lengths") {
    const auto fib = TileLengths(ParseSubstitution(kFibonacci), LengthMode::kNatural);
    CHECK(fib == FieldVector{Phi(), FieldScalar(1)});
    CHECK(TileLengths(ParseSubstitution(kThueMorse), LengthMode::kNatural) ==
          FieldVector{FieldScalar(1), FieldScalar(1)});
    const auto np = TileLengths(ParseSubstitution(kNonPisot), LengthMode::kNatural);
    CHECK(np[1] == FieldScalar(1));
    CHECK(np[0] == FieldScalar(mpq_class(1, 2), mpq_class(1, 2), 13));
    CHECK_THROWS_AS(TileLengths(ParseSubstitution("a:ab,b:ac,c:a"), LengthMode::kNatural),
                    UnsupportedError);
  }

  TEST_CASE("examples") {
    const auto unit = PuncturesFixedPoint(ParseSubstitution("a:aa"), 6, LengthMode::kNatural);
    REQUIRE(unit.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(unit.point(i)[0] == FieldScalar(mpq_class(2 * long(i) + 1, 2)));
    const auto tm = PuncturesFixedPoint(ParseSubstitution(kThueMorse), 8, LengthMode::kUnit);
    for (std::size_t i = 0; i < 8; ++i) CHECK(tm.point(i)[0] == FieldScalar(mpq_class(2 * long(i) + 1, 2)));
    CHECK(FixedPointPrefix(ParseSubstitution(kFibonacci), 8) == "abaababa");
    const auto fib = PuncturesFixedPoint(ParseSubstitution(kFibonacci), 3, LengthMode::kNatural);
    const FieldScalar half(mpq_class(1, 2));
    CHECK(fib.point(0)[0] == Phi() * half);
    CHECK(fib.point(1)[0] == Phi() + half);
    CHECK(fib.point(2)[0] == Phi() + FieldScalar(1) + Phi() * half);
    CHECK(FindFixedPointSeed(ParseSubstitution("a:b,b:ab")).power == 2);
    CHECK_THROWS_AS(FindFixedPointSeed(ParseSubstitution("a:b,b:a")), InputError);
  }

  TEST_CASE("Fibonacci left-end punctures match the cut-and-project set") {
    const auto model = GenerateModelSet(testing::Fibonacci(), FieldVector{FieldScalar(0)}, 110,
                                        GenerationPolicy::Closed());
    const auto punctures = PuncturesFixedPoint(ParseSubstitution(kFibonacci), 80,
                                               LengthMode::kNatural, PunctureRule::kLeftEndpoint);
    const FieldScalar shift = FieldScalar(0) - punctures.point(0)[0];
    std::vector<FieldScalar> lhs, rhs;
    for (const auto& p : model.points()) {
      if (p[0].sign() >= 0 && Compare(p[0], FieldScalar(100)) <= 0) lhs.push_back(p[0]);
    }
    for (const auto& p : punctures.points()) {
      const FieldScalar x = p[0] + shift;
      if (Compare(x, FieldScalar(100)) <= 0) rhs.push_back(x);
    }
    REQUIRE(lhs.size() > 50);
    CHECK(lhs.front() == FieldScalar(0));
    CHECK(lhs == rhs);
    // Mid-points shift the two tile types by different amounts.
    const auto mids = PuncturesFixedPoint(ParseSubstitution(kFibonacci), 3, LengthMode::kNatural);
    CHECK(mids.point(1)[0] - mids.point(0)[0] != model.point(model.Find(FieldVector{Phi()}))[0]);
  }
}

TEST_SUITE("classification") {
  TEST_CASE("Thue-Morse") {
    const auto r = Classify(ParseSubstitution(kThueMorse));
    CHECK(r.primitivity.primitive);
    CHECK(r.constant_length == 2u);
    CHECK(r.perron->pisot);
    CHECK(r.perron->lambda == doctest::Approx(2.0));
    CHECK(r.coincidence_rank == 2u);
    CHECK(r.pure_point == false);
    CHECK(r.meyer == true);
  }

  TEST_CASE("period doubling") {
    const auto r = Classify(ParseSubstitution(kPeriodDoubling));
    CHECK(r.coincidence_rank == 1u);
    CHECK(r.pure_point == true);
  }

  TEST_CASE("Fibonacci") {
    const auto r = Classify(ParseSubstitution(kFibonacci));
    CHECK(r.perron->pisot);
    CHECK(r.meyer == true);
    CHECK_FALSE(r.coincidence_rank.has_value());
    CHECK_FALSE(r.pure_point.has_value());
    CHECK(r.Json()["coincidence_rank"] == "unknown");
    CHECK(r.Text().find("Meyer: the punctures form a Meyer set") != std::string::npos);
  }

  TEST_CASE("non-Pisot") {
    const auto r = Classify(ParseSubstitution(kNonPisot));
    CHECK_FALSE(r.perron->pisot);
    CHECK(r.meyer == false);
    bool trivial = false;
    for (const auto& v : r.verdicts) trivial |= v.statement == "maximal equicontinuous factor is trivial";
    CHECK(trivial);
  }

  TEST_CASE("degenerate inputs") {
    const auto np = Classify(ParseSubstitution("a:a,b:b"));
    CHECK_FALSE(np.primitivity.primitive);
    CHECK_FALSE(np.perron.has_value());
    const auto periodic = Classify(ParseSubstitution("a:ab,b:ab"));
    CHECK_FALSE(periodic.aperiodicity.aperiodic);
    CHECK_FALSE(periodic.coincidence_rank.has_value());
    const auto tri = Classify(ParseSubstitution("a:ab,b:ac,c:a"));
    CHECK(tri.lengths.empty());
    CHECK(tri.meyer == true);
  }
}
