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

#include <string>

#include "meyerion/scheme.hpp"

namespace meyerion::testing {

inline const Scheme& Octagonal() {
  static const Scheme scheme = LoadScheme(std::string(MEYERION_SCHEMES_DIR) + "/octagonal.json");
  return scheme;
}

inline const Scheme& Fibonacci() {
  static const Scheme scheme = LoadScheme(std::string(MEYERION_SCHEMES_DIR) + "/fibonacci.json");
  return scheme;
}

}  // namespace meyerion::testing
