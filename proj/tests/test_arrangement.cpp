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

#include <algorithm>

#include "meyerion/arrangement.hpp"
#include "meyerion/errors.hpp"
#include "test_support.hpp"

using namespace meyerion;
using meyerion::testing::Octagonal;

namespace {

FieldScalar Q(long p, long q = 1) { return FieldScalar(mpq_class(p, q)); }
FieldScalar R2(long p, long q = 1) { return FieldScalar(mpq_class(0), mpq_class(p, q), 2); }

CutType Cut(std::vector<std::size_t> one_based) {
  CutType c;
  for (auto i : one_based) c.members.push_back(i - 1);
  return c;
}

std::vector<Sign> Signs(const std::string& s) {
  std::vector<Sign> out;
  for (char c : s) out.push_back(ParseSign(c));
  return out;
}

FieldVector HalfP2(const IntVector& z) {
  return Scale(Q(1, 2), Octagonal().Internal(z));
}

const Arrangement& Oct() {
  static const Arrangement a = AnalyzeArrangement(Octagonal());
  return a;
}

}  // namespace

TEST_SUITE("cut types") {
  TEST_CASE("examples") {
    const Scheme& s = Octagonal();
    CHECK(ComputeCutType(s, FieldVector{Q(0), Q(0)}) == Cut({1, 2, 3, 4}));
    CHECK(ComputeCutType(s, TorusReduce(s, HalfP2({1, 0, 1, 0}))) == Cut({2, 4}));
    CHECK(ComputeCutType(s, TorusReduce(s, HalfP2({0, 1, 0, 1}))) == Cut({1, 3}));
    CHECK(ComputeCutType(s, FieldVector{Q(1, 3), Q(1, 5)}) == Cut({}));
    CHECK(ComputeCutType(s, FieldVector{Q(1, 3), Q(0)}) == Cut({1}));
    CHECK(ComputeCutType(s, FieldVector{R2(1, 6), R2(1, 6)}) == Cut({2}));
    CHECK(Cut({2, 4}).to_string() == "{2,4}");
  }

  TEST_CASE("invariant under Gamma") {
    const Scheme& s = Octagonal();
    const std::vector<FieldVector> xis{{Q(1, 3), Q(0)}, {Q(1, 3), Q(1, 5)}, HalfP2({1, 0, 1, 0}),
                                       {R2(1, 6), R2(1, 6)}, {Q(0), Q(0)}};
    for (const auto& xi : xis) {
      const CutType c = ComputeCutType(s, TorusReduce(s, xi));
      for (const IntVector& z : {IntVector{1, 0, 0, 0}, IntVector{0, 1, 0, 0}, IntVector{2, -1, 3, 1},
                                 IntVector{0, 0, -1, 5}}) {
        CHECK(ComputeCutType(s, TorusReduce(s, Add(xi, s.Internal(z)))) == c);
      }
    }
  }

  TEST_CASE("census realizes exactly the eight octagonal cut types") {
    const std::set<CutType> expected{Cut({}),     Cut({1}),    Cut({2}),    Cut({3}),
                                     Cut({4}),    Cut({1, 3}), Cut({2, 4}), Cut({1, 2, 3, 4})};
    CHECK(Oct().census.realized == expected);
    for (const auto& [cut, xi] : Oct().census.representatives) {
      CHECK(ComputeCutType(Octagonal(), xi) == cut);
    }
  }
}

TEST_SUITE("point types") {
  TEST_CASE("counts") {
    CHECK(Oct().all_sign_vectors == 65);
    CHECK(Oct().point_types.size() == 25);
    CHECK(Oct().PointTypesWithDomain(Cut({1})).size() == 2);
    CHECK(Oct().PointTypesWithDomain(Cut({2, 4})).size() == 4);
    CHECK(Oct().PointTypesWithDomain(Cut({1, 3})).size() == 4);
    CHECK(Oct().PointTypesWithDomain(Cut({1, 2, 3, 4})).size() == 8);
    CHECK(Oct().PointTypesWithDomain(Cut({})).size() == 1);
    CHECK(Oct().FindPointType(Signs("****")) != nullptr);
  }

  TEST_CASE("witnesses are exact, order is lexicographic + < - < inf") {
    const auto& types = Oct().point_types;
    for (std::size_t i = 0; i < types.size(); ++i) {
      CHECK(types[i].cone.Contains(types[i].witness));
      if (i > 0) CHECK(types[i - 1].signs < types[i].signs);
    }
    CHECK(types.front().to_string() == "++++");
    CHECK(types.back().to_string() == "****");
  }

  TEST_CASE("same-domain cones are disjoint and full-domain cones cover a grid") {
    const auto& types = Oct().point_types;
    for (std::size_t i = 0; i < types.size(); ++i) {
      for (std::size_t j = i + 1; j < types.size(); ++j) {
        if (!(types[i].domain() == types[j].domain())) continue;
        std::vector<LinearForm> both = types[i].cone.constraints;
        both.insert(both.end(), types[j].cone.constraints.begin(), types[j].cone.constraints.end());
        CHECK_FALSE(FmFeasible(both, 2).feasible);
      }
    }
    const auto full = Oct().PointTypesWithDomain(Cut({1, 2, 3, 4}));
    for (long a = -6; a <= 6; ++a) {
      for (long b = -6; b <= 6; ++b) {
        const FieldVector x{Q(a, 3), Q(b, 2) + R2(a % 3, 7)};
        bool on_line = false;
        for (const auto& h : Octagonal().hyperplanes()) on_line |= Dot(h.form, x).is_zero();
        int hits = 0;
        for (const auto* t : full) hits += t->cone.Contains(x) ? 1 : 0;
        CHECK(hits == (on_line ? 0 : 1));
      }
    }
  }

  TEST_CASE("parsing") {
    CHECK(ParsePointType(Octagonal(), "+***").to_string() == "+***");
    CHECK(ParsePointType(Octagonal(), "-\xe2\x88\x9e\xe2\x88\x9e\xe2\x88\x9e").to_string() == "-***");
    CHECK_THROWS_AS(ParsePointType(Octagonal(), "+0**"), InputError);
    CHECK_THROWS_AS(ParsePointType(Octagonal(), "+*"), InputError);
    // y > 0, y - x < 0, x < 0 is empty.
    CHECK_THROWS_AS(ParsePointType(Octagonal(), "+--*"), InputError);
  }
}

TEST_SUITE("transformation types") {
  TEST_CASE("seventeen types, all effective") {
    const auto& types = Oct().transformation_types;
    CHECK(types.size() == 17);
    std::size_t full = 0, half_lines = 0, origin = 0;
    for (const auto& t : types) {
      CHECK(t.effective());
      CHECK(t.cone.Contains(t.witness));
      const auto zeros = t.zero_set().size();
      const std::size_t dimension = 2 - std::min<std::size_t>(zeros, 2);
      CHECK(t.cone_dimension == dimension);
      full += zeros == 0;
      half_lines += zeros == 1;
      origin += zeros == 4;
    }
    CHECK(full == 8);
    CHECK(half_lines == 8);
    CHECK(origin == 1);
    CHECK(Oct().FindTransformationType(Signs("0000")) != nullptr);
    CHECK(Oct().minimal_complexity);
  }

  TEST_CASE("half-line lattices are dense in their lines") {
    const TransformationType* t = Oct().FindTransformationType(Signs("0-++"));
    REQUIRE(t != nullptr);
    CHECK(IsZeroVector(t->witness) == false);
    CHECK(t->witness[1].is_zero());
    CHECK(t->witness[0].sign() > 0);
    CHECK(t->span_lattice.size() >= 2);
    for (const auto& g : t->span_lattice) CHECK(g[1].is_zero());
  }

  TEST_CASE("a line meeting Gamma in a cyclic group is ineffective") {
    SchemeDescription d = Octagonal().description();
    d.p1 = {{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(1), Q(0), Q(0)}};
    d.p2 = {{Q(1), Q(1, 2), Q(0), R2(1)}, {Q(0), Q(0), Q(1), R2(1)}};
    const Scheme s(d);
    const TransformationType t = ParseTransformationType(s, "0-++");
    CHECK(t.effectiveness == Effectiveness::kIneffective);
    CHECK(t.span_lattice.size() == 2);
    CHECK(ParseTransformationType(s, "+0++").effectiveness == Effectiveness::kEffective);
    CHECK(ParseTransformationType(s, "0000").effectiveness == Effectiveness::kEffective);
  }

  TEST_CASE("parsing") {
    CHECK(ParseTransformationType(Octagonal(), "0-++").to_string() == "0-++");
    CHECK_THROWS_AS(ParseTransformationType(Octagonal(), "00++"), InputError);
    CHECK_THROWS_AS(ParseTransformationType(Octagonal(), "*-++"), InputError);
  }
}

TEST_SUITE("cones") {
  Cone TypeCone(const std::string& signs) { return SignCone(Octagonal(), Signs(signs)); }

  TEST_CASE("tangent cones") {
    const Cone sector = TypeCone("+-++");
    const FieldVector inside{Q(3), Q(1)};
    CHECK(TangentCone(sector, inside).constraints.empty());
    const Cone at_tip = TangentCone(sector, FieldVector{Q(0), Q(0)});
    CHECK(ConeContains(at_tip, sector.Closure()));
    CHECK(ConeContains(sector.Closure(), at_tip));
    const Cone closed{2, {{{Q(0), Q(1)}, Q(0), Relation::kNonNegative},
                          {{Q(1), Q(-1)}, Q(0), Relation::kNonNegative}}};
    const Cone t = TangentCone(closed, FieldVector{Q(1), Q(0)});
    REQUIRE(t.constraints.size() == 1);
    CHECK(t.constraints[0].coefficients == FieldVector{Q(0), Q(1)});
    CHECK_THROWS_AS(TangentCone(sector, FieldVector{Q(0), Q(1)}), InputError);
  }

  TEST_CASE("containment") {
    const Cone half_line = TypeCone("0-++");
    CHECK(ConeContains(TypeCone("+-++").Closure(), half_line));
    CHECK_FALSE(ConeContains(TypeCone("++++").Closure(), half_line));
    CHECK_FALSE(ConeContains(TypeCone("+-++"), half_line));
    for (const auto& t : Oct().transformation_types) {
      CHECK(ConeContains(t.cone, t.cone));
      CHECK(ConeContains(Cone::Whole(2), t.cone));
      CHECK(ConeContains(t.cone.Closure(), TypeCone("0000")));
    }
    CHECK_THROWS_AS(ConeContains(Cone::Whole(3), half_line), InputError);
  }
}
