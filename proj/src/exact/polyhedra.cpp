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

#include "meyerion/polyhedra.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "meyerion/errors.hpp"

namespace meyerion {

FieldScalar LinearForm::Evaluate(std::span<const FieldScalar> x) const {
  return Dot(coefficients, x) + constant;
}

bool LinearForm::SatisfiedBy(std::span<const FieldScalar> x) const {
  const int s = Evaluate(x).sign();
  switch (relation) {
    case Relation::kEqual:
      return s == 0;
    case Relation::kPositive:
      return s > 0;
    case Relation::kNonNegative:
      return s >= 0;
  }
  return false;
}

std::string LinearForm::to_string() const {
  std::string out = "[" + ToString(coefficients) + "].x + (" + constant.to_string() + ")";
  switch (relation) {
    case Relation::kEqual:
      return out + " = 0";
    case Relation::kPositive:
      return out + " > 0";
    case Relation::kNonNegative:
      return out + " >= 0";
  }
  return out;
}

namespace {

bool IsStrict(Relation r) { return r == Relation::kPositive; }

// Constant-only constraint check.
bool ConstantHolds(const LinearForm& f) {
  const int s = f.constant.sign();
  switch (f.relation) {
    case Relation::kEqual:
      return s == 0;
    case Relation::kPositive:
      return s > 0;
    case Relation::kNonNegative:
      return s >= 0;
  }
  return false;
}

// Scales so the first nonzero coefficient has absolute value 1 (positive
// factor, so the relation is preserved). Equalities are also sign-fixed.
void Normalize(LinearForm& f) {
  auto it = std::find_if(f.coefficients.begin(), f.coefficients.end(),
                         [](const FieldScalar& x) { return !x.is_zero(); });
  if (it == f.coefficients.end()) return;
  FieldScalar factor = FieldScalar(1) / *it;
  if (f.relation != Relation::kEqual && factor.sign() < 0) factor = -factor;
  for (auto& x : f.coefficients) x *= factor;
  f.constant *= factor;
}

bool SameForm(const LinearForm& a, const LinearForm& b) {
  return a.relation == b.relation && a.constant == b.constant && a.coefficients == b.coefficients;
}

struct EliminationStep {
  std::size_t variable = 0;
  std::optional<LinearForm> equality;  // variable solved from this
  std::vector<LinearForm> lower;       // positive coefficient on variable
  std::vector<LinearForm> upper;       // negative coefficient on variable
};

// Returns nullopt on a violated constant constraint; otherwise the
// non-trivial constraints, normalized and deduplicated.
std::optional<std::vector<LinearForm>> Simplify(std::vector<LinearForm> system) {
  std::vector<LinearForm> out;
  for (auto& f : system) {
    if (f.IsTrivial()) {
      if (!ConstantHolds(f)) return std::nullopt;
      continue;
    }
    Normalize(f);
    if (std::none_of(out.begin(), out.end(), [&](const LinearForm& g) { return SameForm(f, g); })) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

// Bound on `variable` implied by `f` given the other variables' values:
// value = -(f(x) without the variable term) / coefficient.
FieldScalar BoundFrom(const LinearForm& f, std::size_t variable, std::span<const FieldScalar> x) {
  FieldScalar rest = f.constant;
  for (std::size_t j = 0; j < f.coefficients.size(); ++j) {
    if (j == variable || f.coefficients[j].is_zero()) continue;
    rest += f.coefficients[j] * x[j];
  }
  return -rest / f.coefficients[variable];
}

}  // namespace

Feasibility FmFeasible(std::span<const LinearForm> constraints, std::size_t dim) {
  std::vector<LinearForm> system;
  for (const auto& f : constraints) {
    if (f.coefficients.size() != dim) throw InputError("linear form dimension mismatch");
    system.push_back(f);
  }
  auto simplified = Simplify(std::move(system));
  if (!simplified) return {};
  system = std::move(*simplified);

  std::vector<EliminationStep> steps;
  for (std::size_t k = dim; k-- > 0;) {
    EliminationStep step;
    step.variable = k;
    auto eq = std::find_if(system.begin(), system.end(), [k](const LinearForm& f) {
      return f.relation == Relation::kEqual && !f.coefficients[k].is_zero();
    });
    std::vector<LinearForm> next;
    if (eq != system.end()) {
      step.equality = *eq;
      const LinearForm& e = *step.equality;
      for (auto it = system.begin(); it != system.end(); ++it) {
        if (it == eq) continue;
        LinearForm f = *it;
        if (!f.coefficients[k].is_zero()) {
          const FieldScalar ratio = f.coefficients[k] / e.coefficients[k];
          for (std::size_t j = 0; j < dim; ++j) f.coefficients[j] -= ratio * e.coefficients[j];
          f.constant -= ratio * e.constant;
          f.coefficients[k] = FieldScalar(0);
        }
        next.push_back(std::move(f));
      }
    } else {
      for (auto& f : system) {
        const int s = f.coefficients[k].sign();
        if (s > 0) {
          step.lower.push_back(f);
        } else if (s < 0) {
          step.upper.push_back(f);
        } else {
          next.push_back(f);
        }
      }
      for (const auto& lo : step.lower) {
        for (const auto& hi : step.upper) {
          // lo * (-hi_k) + hi * lo_k cancels variable k; both multipliers > 0.
          const FieldScalar a = -hi.coefficients[k];
          const FieldScalar b = lo.coefficients[k];
          LinearForm f;
          f.coefficients.resize(dim);
          for (std::size_t j = 0; j < dim; ++j) {
            f.coefficients[j] = a * lo.coefficients[j] + b * hi.coefficients[j];
          }
          f.coefficients[k] = FieldScalar(0);
          f.constant = a * lo.constant + b * hi.constant;
          f.relation = (IsStrict(lo.relation) || IsStrict(hi.relation)) ? Relation::kPositive
                                                                        : Relation::kNonNegative;
          next.push_back(std::move(f));
        }
      }
    }
    auto reduced = Simplify(std::move(next));
    if (!reduced) return {};
    system = std::move(*reduced);
    steps.push_back(std::move(step));
  }
  if (!system.empty()) {
    throw InvariantError("Fourier-Motzkin left constraints after eliminating every variable");
  }

  FieldVector x(dim);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::size_t k = it->variable;
    if (it->equality) {
      x[k] = BoundFrom(*it->equality, k, x);
      continue;
    }
    std::optional<FieldScalar> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& f : it->lower) {
      FieldScalar b = BoundFrom(f, k, x);
      const int c = lo ? Compare(b, *lo) : 1;
      if (c > 0) {
        lo = std::move(b);
        lo_strict = IsStrict(f.relation);
      } else if (c == 0) {
        lo_strict = lo_strict || IsStrict(f.relation);
      }
    }
    for (const auto& f : it->upper) {
      FieldScalar b = BoundFrom(f, k, x);
      const int c = hi ? Compare(b, *hi) : -1;
      if (c < 0) {
        hi = std::move(b);
        hi_strict = IsStrict(f.relation);
      } else if (c == 0) {
        hi_strict = hi_strict || IsStrict(f.relation);
      }
    }
    auto admissible = [&](const FieldScalar& v) {
      if (lo) {
        const int c = Compare(v, *lo);
        if (c < 0 || (c == 0 && lo_strict)) return false;
      }
      if (hi) {
        const int c = Compare(v, *hi);
        if (c > 0 || (c == 0 && hi_strict)) return false;
      }
      return true;
    };
    if (admissible(FieldScalar(0))) {
      x[k] = FieldScalar(0);
    } else if (lo && hi) {
      x[k] = Compare(*lo, *hi) == 0 ? *lo : (*lo + *hi) / FieldScalar(2);
    } else if (lo) {
      x[k] = lo_strict ? *lo + FieldScalar(1) : *lo;
    } else if (hi) {
      x[k] = hi_strict ? *hi - FieldScalar(1) : *hi;
    }
    if (!admissible(x[k])) throw InvariantError("Fourier-Motzkin back-substitution failed");
  }
  for (const auto& f : constraints) {
    if (!f.SatisfiedBy(x)) throw InvariantError("Fourier-Motzkin witness violates " + f.to_string());
  }
  return {true, std::move(x)};
}

}  // namespace meyerion
