// Copyright 2026 The Snapshot-QAOA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqaoa {

using BigInt = boost::multiprecision::cpp_int;
using Fraction = boost::multiprecision::cpp_rational;

/// Parses "a/b", "-3", "0.125" or "1.5e-2" into an exact fraction. Returns
/// nullopt for anything else (including "inf", "nan", "sqrt(2)").
std::optional<Fraction> parse_fraction(std::string_view text);

/// Exact value of the shortest decimal that round-trips to `value`, so
/// 0.3 becomes 3/10 rather than the binary expansion. nullopt for non-finite.
std::optional<Fraction> fraction_from_decimal(double value);

/// "num/den" (den printed even when it is 1).
std::string fraction_string(const Fraction &f);

double to_double(const Fraction &f);

/// LCM of positive fractions a_i/b_i in lowest terms: lcm(a_i) / gcd(b_i).
Fraction lcm(std::span<const Fraction> values);

} // namespace sqaoa
