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

#include "sqaoa/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "sqaoa/errors.hpp"

namespace sqaoa {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

BigInt pow10(long exponent) {
    BigInt result = 1;
    for (long i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

// [sign] digits [. digits] [e|E [sign] digits]
std::optional<Fraction> parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        std::string_view exp_part = s.substr(epos + 1);
        s = s.substr(0, epos);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 4) {
            return std::nullopt;
        }
        long value = 0;
        std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), value);
        exponent = exp_negative ? -value : value;
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = s.substr(0, dot);
        const std::string_view frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            return std::nullopt;
        }
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) {
            return std::nullopt;
        }
        digits = std::string(s);
    }
    // cpp_int reads a leading 0 as an octal prefix.
    const auto first = digits.find_first_not_of('0');
    BigInt mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) {
        mantissa = -mantissa;
    }
    if (exponent >= 0) {
        return Fraction(mantissa * pow10(exponent));
    }
    return Fraction(mantissa, pow10(-exponent));
}

} // namespace

std::optional<Fraction> parse_fraction(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        return std::nullopt;
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_decimal(trim(text.substr(0, slash)));
        const auto den = parse_decimal(trim(text.substr(slash + 1)));
        if (!num || !den || *den == 0) {
            return std::nullopt;
        }
        return Fraction(*num / *den);
    }
    return parse_decimal(text);
}

std::optional<Fraction> fraction_from_decimal(double value) {
    if (!std::isfinite(value)) {
        return std::nullopt;
    }
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) {
        return std::nullopt;
    }
    return parse_decimal(std::string_view(buffer, static_cast<std::size_t>(end - buffer)));
}

std::string fraction_string(const Fraction &f) {
    return boost::multiprecision::numerator(f).str() + "/" +
           boost::multiprecision::denominator(f).str();
}

double to_double(const Fraction &f) { return f.convert_to<double>(); }

Fraction lcm(std::span<const Fraction> values) {
    if (values.empty()) {
        throw ConfigError("lcm of an empty set is undefined");
    }
    BigInt num_lcm = 0;
    BigInt den_gcd = 0;
    for (const auto &v : values) {
        if (v <= 0) {
            throw ConfigError("lcm is defined here for positive fractions only");
        }
        const BigInt a = boost::multiprecision::numerator(v);
        const BigInt b = boost::multiprecision::denominator(v);
        num_lcm = num_lcm == 0 ? a : boost::multiprecision::lcm(num_lcm, a);
        den_gcd = den_gcd == 0 ? b : boost::multiprecision::gcd(den_gcd, b);
    }
    return Fraction(num_lcm, den_gcd);
}

} // namespace sqaoa
