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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   meyerion_acceptance [--schemes DIR] [--expect-fail N]...
//
// The exit status is 0 when the failing criteria are exactly the expected
// ones, 1 otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "meyerion/arrangement.hpp"
#include "meyerion/dynamics.hpp"
#include "meyerion/ellis.hpp"
#include "meyerion/model_set.hpp"
#include "meyerion/scheme.hpp"
#include "meyerion/substitution.hpp"

namespace {

using namespace meyerion;

FieldScalar Q(long p, long q = 1) { return FieldScalar(mpq_class(p, q)); }
FieldScalar R2(long p, long q = 1) { return FieldScalar(mpq_class(0), mpq_class(p, q), 2); }

struct Context {
  Scheme octagonal;
  Scheme fibonacci;
  Arrangement oct;
};

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const FieldVector kGeneric{Q(1, 7), Q(2, 9)};
const FieldVector kLine{Q(1, 2), Q(0)};
const FieldVector kOrigin{Q(0), Q(0)};

FieldVector Pair(const Scheme& s) {
  return TorusReduce(s, Scale(Q(1, 2), s.Internal(IntVector{1, 0, 1, 0})));
}

const TransformationType& T(const Context& c, const char* text) {
  const auto t = ParseTransformationType(c.octagonal, text);
  return *c.oct.FindTransformationType(t.signs);
}

Outcome Census(const Context& c) {
  Outcome o;
  const auto& realized = c.oct.census.realized;
  const std::set<std::string> expected{"{}", "{1}", "{2}", "{3}", "{4}", "{1,3}", "{2,4}", "{1,2,3,4}"};
  std::set<std::string> got;
  for (const auto& cut : realized) got.insert(cut.to_string());
  o.Require(got == expected, "cut types differ");
  o.Require(c.oct.point_types.size() == 25,
            "point types " + std::to_string(c.oct.point_types.size()));
  const auto on1 = c.oct.PointTypesWithDomain(CutType{{0}}).size();
  const auto on24 = c.oct.PointTypesWithDomain(CutType{{1, 3}}).size();
  o.Require(on1 == 2, "dom {1}: " + std::to_string(on1));
  o.Require(on24 == 4, "dom {2,4}: " + std::to_string(on24));
  o.detail = o.pass ? "8 cut types, 25 point types, |dom {1}| = 2, |dom {2,4}| = 4" : o.detail;
  return o;
}

Outcome Monoid(const Context& c) {
  Outcome o;
  const auto& types = c.oct.transformation_types;
  o.Require(types.size() == 17, "types " + std::to_string(types.size()));
  o.Require(c.oct.minimal_complexity, "not every type effective");
  const auto& unit = T(c, "0000");
  std::size_t bad = 0;
  for (const auto& t : types) {
    bad += !(MonoidProduct(c.oct, t, t) == t);
    bad += !(MonoidProduct(c.oct, unit, t) == t) || !(MonoidProduct(c.oct, t, unit) == t);
    for (const auto& u : types) {
      const auto& tu = MonoidProduct(c.oct, t, u);
      for (const auto& v : types) {
        bad += !(MonoidProduct(c.oct, tu, v) == MonoidProduct(c.oct, t, MonoidProduct(c.oct, u, v)));
      }
    }
  }
  o.Require(bad == 0, std::to_string(bad) + " law violations");
  std::vector<TransformationType> ideal;
  try {
    ideal = MinimalIdeal(c.oct);
  } catch (const std::exception& e) {
    o.Require(false, e.what());
  }
  std::size_t full = 0, domination = 0, checked = 0;
  for (const auto& t : ideal) {
    full += t.zero_set().empty();
    for (const auto& s : types) {
      ++checked;
      domination += !(MonoidProduct(c.oct, t, s) == t);
    }
  }
  std::size_t full_domain = 0;
  for (const auto& t : types) full_domain += t.zero_set().empty();
  o.Require(ideal.size() == 8 && full == 8 && full_domain == 8, "ideal is not the 8 full-domain types");
  o.Require(checked == 17 * 8 && domination == 0, "left domination fails");
  if (o.pass) o.detail = "17 effective types, 17^3 triples associative, ideal of 8, 136 dominations";
  return o;
}

Outcome OrderGeometry(const Context& c) {
  Outcome o;
  std::size_t exceptions = 0, greater = 0;
  for (const auto& t : c.oct.transformation_types) {
    for (const auto& u : c.oct.transformation_types) {
      const auto& tu = MonoidProduct(c.oct, t, u);
      const auto& ut = MonoidProduct(c.oct, u, t);
      const bool algebraic = tu == u && ut == u;
      const bool geometric = ConeContains(u.cone.Closure(), t.cone);
      exceptions += algebraic != geometric;
      greater += algebraic;
    }
  }
  o.Require(exceptions == 0, std::to_string(exceptions) + " exceptions");
  if (o.pass) o.detail = "289 pairs, " + std::to_string(greater) + " related, 0 exceptions";
  return o;
}

Outcome ActionLaws(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const std::size_t n = 120;
  const auto elements = SampleEllisElements(s, c.oct, n, 7);
  const auto points = SampleXiPoints(s, c.oct, n, 11);
  o.Require(elements.size() == n && points.size() == n, "sampling fell short");
  std::size_t action = 0, morphism = 0, infeasible = 0;
  for (std::size_t k = 0; k < elements.size() && k < points.size(); ++k) {
    const auto& e = elements[k];
    const auto& f = elements[(k * 37 + 5) % elements.size()];
    const auto& x = points[k];
    const XiPoint lhs = EllisAction(s, EllisProduct(s, c.oct, e, f), x);
    const XiPoint rhs = EllisAction(s, e, EllisAction(s, f, x));
    action += !(lhs.xi == rhs.xi && lhs.type == rhs.type);
    const XiPoint ex = EllisAction(s, e, x);
    morphism += !(ex.xi == TorusReduce(s, Add(e.xi, x.xi)));
    for (const XiPoint* p : {&lhs, &rhs, &ex}) {
      infeasible += !p->type.cone.Feasible() || !(ComputeCutType(s, p->xi) == p->type.domain());
    }
  }
  o.Require(action == 0, std::to_string(action) + " action failures");
  o.Require(morphism == 0, std::to_string(morphism) + " morphism failures");
  o.Require(infeasible == 0, std::to_string(infeasible) + " infeasible point types");
  if (o.pass) o.detail = std::to_string(n) + " exact triples";
  return o;
}

Outcome Geometry(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const FieldVector y{Q(1, 5), Q(1, 7)};
  const auto p20 = GenerateModelSet(s, y, 20, GenerationPolicy::Closed());
  o.Require(p20.size() == 1516, "R = 20 patch has " + std::to_string(p20.size()) + " points");
  const FieldScalar min_sq(mpq_class(2), mpq_class(-1), 2);
  o.Require(MinimumSquaredDistance(p20) == min_sq, "minimum squared distance is not 2 - sqrt2");
  const FieldScalar covering = R2(1, 2);
  o.Require(CheckCovering(p20, covering, mpq_class(1, 4)).passed, "covering check fails");
  const FieldScalar flc = covering + covering;
  const auto n30 = PatchClassCount(GenerateModelSet(s, y, 30, GenerationPolicy::Closed()), flc);
  const auto n40 = PatchClassCount(GenerateModelSet(s, y, 40, GenerationPolicy::Closed()), flc);
  o.Require(n30 == n40, "FLC census " + std::to_string(n30) + " vs " + std::to_string(n40));
  const MeyerWitness w = ComputeMeyerWitness(p20, Q(1));
  o.Require(w.f.size() == 34 && w.inclusion_holds, "Meyer witness |F| = " + std::to_string(w.f.size()));
  if (o.pass) {
    o.detail = "1516 points, min dist^2 = 2 - sqrt2, covering sqrt2/2 on 1/4 grid, " +
               std::to_string(n30) + " patch classes at R = 30 and 40, |F| = 34 (K = 1)";
  }
  return o;
}

Outcome Fibers(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const std::pair<FieldVector, std::size_t> cases[] = {
      {kGeneric, 1}, {kLine, 2}, {Pair(s), 4}, {kOrigin, 8}};
  std::string sizes;
  for (const auto& [xi, expected] : cases) {
    const FiberSet f = FiberElements(s, c.oct, xi);
    const auto patterns = f.Patterns(s, 6);
    const std::size_t distinct = DistinctPatchCount(patterns, kOrigin, 5);
    o.Require(f.elements.size() == expected && distinct == expected,
              "fiber over " + ToString(xi) + ": " + std::to_string(f.elements.size()) + " elements, " +
                  std::to_string(distinct) + " distinct");
    sizes += (sizes.empty() ? "" : "/") + std::to_string(f.elements.size());
  }
  if (o.pass) o.detail = "sizes " + sizes + ", pairwise distinct at R = 5";
  return o;
}

Outcome Convention(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const FieldVector xis[] = {kGeneric, kLine, Pair(s), kOrigin};
  const unsigned ks[] = {6, 7, 8};
  const auto check =
      ValidateBoundaryConvention(s, c.oct, xis, BoundaryConvention::kOutwardNegative, 10, ks);
  o.Require(check.oracle_stable, "oracle did not stabilize for k = 6, 7, 8");
  o.Require(check.final_mismatches == 0, std::to_string(check.final_mismatches) + " mismatches remain");
  o.Require(check.final == DefaultBoundaryConvention(), "library default disagrees with the oracle");
  o.detail = std::string("start ") + ToString(check.initial) + ", " +
             std::to_string(check.initial_mismatches) + "/" + std::to_string(check.compared) +
             " mismatched, " + (check.flipped ? "flipped to " : "kept ") + ToString(check.final) + ", " +
             std::to_string(check.final_mismatches) + " after re-validation" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome Statistical(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const auto fiber = FiberElements(s, c.oct, kLine).Patterns(s, 80);
  const FieldScalar radii[] = {20, 40, 80};
  const auto d = StatisticalCoincidence(fiber[0], fiber[1], radii);
  o.Require(d.densities[0] > d.densities[1] && d.densities[1] > d.densities[2], "density not decreasing");
  o.Require(d.densities[2] * 3 <= d.densities[0], "density(80) > density(20)/3");
  const auto near = FiberElements(s, c.oct, kLine).Patterns(s, 25);
  const auto w = StrongProximalWitness(near[0], near[1], 10, 10);
  o.Require(w.has_value(), "no strong-proximality witness at R = 10");
  if (o.pass) {
    o.detail = "counts " + std::to_string(d.counts[0]) + "/" + std::to_string(d.counts[1]) + "/" +
               std::to_string(d.counts[2]) + ", witness t = (" + ToString(*w) + ")";
  }
  return o;
}

Outcome Coincidence(const Context& c) {
  Outcome o;
  const Scheme& s = c.octagonal;
  const FieldScalar probe = 5;
  const mpq_class side = 40;
  const auto translates = SampleTranslates(2, side, 200, 2024);
  const auto line = FiberElements(s, c.oct, kLine).Patterns(s, CoverageRadius(2, side, probe));
  const auto single = SinglePatchFraction(line, probe, translates);
  o.Require(single.fraction() >= 0.95, "single 5-patch fraction " + std::to_string(single.single) + "/" +
                                           std::to_string(single.samples) + " < 0.95");
  std::string ranks;
  for (const auto& xi : {kLine, Pair(s), kOrigin}) {
    const auto patterns = FiberElements(s, c.oct, xi).Patterns(s, CoverageRadius(2, side, probe));
    const auto cr = EstimateCoincidenceRank(patterns, probe, translates);
    o.Require(cr.estimate == 1, "cr estimate " + std::to_string(cr.estimate) + " at " + ToString(xi));
    ranks += (ranks.empty() ? "" : ",") + std::to_string(cr.estimate);
  }
  if (o.pass) {
    o.detail = "single-patch fraction " + std::to_string(single.single) + "/200, cr = " + ranks;
  } else {
    o.detail += "; cr estimates " + ranks;
  }
  return o;
}

Outcome Classifier(const Context&) {
  Outcome o;
  const auto tm = Classify(ParseSubstitution("0:01,1:10"));
  o.Require(tm.primitivity.primitive && tm.constant_length == 2u && tm.perron && tm.perron->pisot &&
                tm.perron->lambda == 2.0 && tm.coincidence_rank == 1u + 1u && tm.pure_point == false,
            "Thue-Morse");
  const auto pd = Classify(ParseSubstitution("a:ab,b:aa"));
  o.Require(pd.coincidence_rank == 1u && pd.pure_point == true, "period doubling");
  const auto fib = Classify(ParseSubstitution("a:ab,b:a"));
  o.Require(fib.perron && fib.perron->pisot && fib.meyer == true, "Fibonacci");
  const auto np = Classify(ParseSubstitution("a:abbb,b:a"));
  bool trivial = false;
  for (const auto& v : np.verdicts) trivial = trivial || v.statement == "maximal equicontinuous factor is trivial";
  o.Require(np.perron && !np.perron->pisot && np.meyer == false && trivial, "a:abbb,b:a");
  if (o.pass) o.detail = "TM cr=2 not pure point; PD cr=1 pure point; Fibonacci Meyer; a:abbb,b:a non-Pisot";
  return o;
}

Outcome CrossValidation(const Context& c) {
  Outcome o;
  const auto model = GenerateModelSet(c.fibonacci, FieldVector{FieldScalar(0)}, 110, GenerationPolicy::Closed());
  const auto punctures = PuncturesFixedPoint(ParseSubstitution("a:ab,b:a"), 80, LengthMode::kNatural,
                                             PunctureRule::kLeftEndpoint);
  std::vector<FieldScalar> lhs, rhs;
  for (const auto& p : model.points()) {
    if (p[0].sign() >= 0 && Compare(p[0], FieldScalar(100)) <= 0) lhs.push_back(p[0]);
  }
  const FieldScalar shift = lhs.empty() ? FieldScalar(0) : lhs.front() - punctures.point(0)[0];
  for (const auto& p : punctures.points()) {
    const FieldScalar x = p[0] + shift;
    if (x.sign() >= 0 && Compare(x, FieldScalar(100)) <= 0) rhs.push_back(x);
  }
  o.Require(!lhs.empty() && lhs == rhs, "point sets differ on [0, 100]");
  if (o.pass) o.detail = std::to_string(lhs.size()) + " points agree exactly";
  return o;
}

PointPattern Integers(const mpq_class& offset, long radius) {
  std::vector<FieldVector> pts;
  for (long k = -radius - 1; k <= radius + 1; ++k) {
    const mpq_class x = offset + k;
    if (abs(x) <= radius) pts.push_back({FieldScalar(x)});
  }
  return PointPattern(pts, {Q(0)}, Q(radius));
}

Outcome Metric(const Context&) {
  Outcome o;
  const auto z = Integers(0, 45);
  mpq_class previous = 1;
  for (const mpq_class& step : {mpq_class(1, 10), mpq_class(1, 20), mpq_class(1, 40)}) {
    const auto b = HullMetricUpper(z, z, step);
    o.Require(b.found && b.value == step / (1 + step) && b.value < previous && b.t == FieldVector{Q(0)} &&
                  b.t_prime == FieldVector{Q(0)},
              "identical patterns at step " + step.get_str());
    previous = b.value;
  }
  for (const mpq_class& t : {mpq_class(1, 10), mpq_class(1, 4), mpq_class(3, 10)}) {
    const auto b = HullMetricUpper(z, Integers(-t, 45), mpq_class(1, 20));
    o.Require(b.found && b.value <= t / (1 + t), "translate " + t.get_str());
  }
  const mpq_class target = mpq_class(1, 20) / mpq_class(21, 20);
  const auto shifted = Integers(mpq_class(-1, 10), 45);
  for (const mpq_class& step : {mpq_class(1, 20), mpq_class(1, 30), mpq_class(1, 40)}) {
    const auto b = HullMetricUpper(z, shifted, step);
    o.Require(b.found && abs(b.value - target) <= step, "Z vs Z - 1/10 at step " + step.get_str());
  }
  if (o.pass) o.detail = "identical -> step/(1+step) -> 0, translates bounded, Z vs Z-1/10 = 1/21";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meyerion acceptance suite"};
  std::string schemes = MEYERION_SCHEMES_DIR;
  std::vector<int> expected;
  app.add_option("--schemes", schemes, "directory with octagonal.json and fibonacci.json");
  app.add_option("--expect-fail", expected, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const Scheme octagonal = LoadScheme(schemes + "/octagonal.json");
  Context c{octagonal, LoadScheme(schemes + "/fibonacci.json"), AnalyzeArrangement(octagonal)};

  const std::vector<std::pair<const char*, std::function<Outcome(const Context&)>>> criteria = {
      {"octagonal arrangement census", Census},
      {"transformation monoid", Monoid},
      {"order and cone inclusion", OrderGeometry},
      {"Ellis action laws", ActionLaws},
      {"model set geometry", Geometry},
      {"fiber structure", Fibers},
      {"boundary convention", Convention},
      {"statistical coincidence", Statistical},
      {"coincidence sampling", Coincidence},
      {"substitution classifier", Classifier},
      {"substitution and cut-and-project agree", CrossValidation},
      {"metric examples", Metric},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(c);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(static_cast<int>(i + 1));
    std::printf("%s %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  const std::set<int> want(expected.begin(), expected.end());
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != want) {
    std::printf("failing criteria differ from the expected set\n");
    return 1;
  }
  return 0;
}
