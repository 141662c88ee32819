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

#include <stdexcept>
#include <string>

namespace meyerion {

// Malformed or inconsistent user input. CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Signals a bug or an input that is not
// almost canonical. CLI exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The data at hand is insufficient to certify the answer (generation radius
// too small, search box not covered). CLI exit code 3.
class ReliabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outside the supported envelope (factorization degree, non-minimal
// complexity). CLI exit code 3.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meyerion
