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
#include <span>
#include <string>
#include <vector>

#include "meyerion/field_scalar.hpp"

namespace meyerion {

enum class Relation {
  kEqual,        // form(x) == 0
  kPositive,     // form(x) > 0
  kNonNegative,  // form(x) >= 0
};

/// An affine constraint `coefficients . x + constant  (relation)  0`.
struct LinearForm {
  FieldVector coefficients;
  FieldScalar constant;
  Relation relation = Relation::kNonNegative;

  FieldScalar Evaluate(std::span<const FieldScalar> x) const;
  bool SatisfiedBy(std::span<const FieldScalar> x) const;
  bool IsTrivial() const { return IsZeroVector(coefficients); }
  std::string to_string() const;
};

struct Feasibility {
  bool feasible = false;
  /// Satisfies every constraint exactly when feasible.
  FieldVector witness;
};

/// Exact Fourier-Motzkin feasibility over the field, with strict/non-strict
/// bookkeeping. Throws InputError if a form's dimension differs from `dim`.
Feasibility FmFeasible(std::span<const LinearForm> constraints, std::size_t dim);

}  // namespace meyerion
