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

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "meyerion/arrangement.hpp"
#include "meyerion/point_pattern.hpp"

namespace meyerion {

/// FNV-1a 64-bit hash as 16 hex digits.
std::string HashHex(std::string_view data);

/// Fixed-point decimal with `digits` fractional digits ("-0" printed as "0").
std::string FormatFixed(double value, int digits = 6);

nlohmann::json PatternToJson(const PointPattern& pattern);
/// InputError on a malformed document.
PointPattern PatternFromJson(const nlohmann::json& doc);
/// Accepts a bare pattern document or a `scheme generate` report.
PointPattern LoadPattern(const std::string& path);

/// Points as radius-0.08 disks, one unit per physical length, y upwards.
/// Points shared by every pattern are black; the others take the colour of
/// the pattern they belong to. 1-D patterns are drawn on the x-axis.
std::string PatternSvg(std::span<const PointPattern> patterns);

nlohmann::json ArrangementJson(const Arrangement& arrangement);

/// Writes the whole string; InputError when the file cannot be written.
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace meyerion
