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

#include "sqaoa/schedule.hpp"

#include <cmath>
#include <numbers>

#include "sqaoa/errors.hpp"

namespace sqaoa {

Schedule Schedule::negated() const {
    Schedule out = *this;
    out.anneal_time = -anneal_time;
    out.tau = -tau;
    out.dt = -dt;
    for (auto &b : out.betas) {
        b = -b;
    }
    for (auto &g : out.gammas) {
        g = -g;
    }
    return out;
}

Schedule make_schedule(std::size_t p, double anneal_time, double c1_hat) {
    if (p == 0) {
        throw ConfigError("schedule depth p must be at least 1");
    }
    if (!(c1_hat > 0.0 && c1_hat <= 1.0)) {
        throw ConfigError("c1_hat must lie in (0, 1], got " + std::to_string(c1_hat));
    }
    if (!(anneal_time >= 0.0) || !std::isfinite(anneal_time)) {
        throw ConfigError("anneal time T must be finite and non-negative");
    }
    Schedule s;
    s.p = p;
    s.anneal_time = anneal_time;
    s.tau = c1_hat * anneal_time;
    const auto pd = static_cast<double>(p);
    s.dt = s.tau / pd;
    s.betas.resize(p);
    s.gammas.resize(p);
    for (std::size_t k = 1; k <= p; ++k) {
        const double ramp = static_cast<double>(k) * c1_hat / pd;
        s.betas[k - 1] = s.dt * (1.0 - ramp);
        s.gammas[k - 1] = s.dt * ramp;
    }
    return s;
}

RationalAngle::RationalAngle(Fraction multiple_of_pi) : value_(std::move(multiple_of_pi)) {}

BigInt RationalAngle::num() const { return boost::multiprecision::numerator(value_); }
BigInt RationalAngle::den() const { return boost::multiprecision::denominator(value_); }
double RationalAngle::radians() const { return to_double(value_) * std::numbers::pi; }
std::string RationalAngle::str() const { return fraction_string(value_); }

RationalAngle default_rho0() { return RationalAngle(Fraction(1, 2)); }

RationalAngle default_rho1(const Fraction &j2) {
    const BigInt b = boost::multiprecision::denominator(j2);
    return RationalAngle(Fraction(b, 2));
}

RationalAngle rho1_for_weights(std::span<const Fraction> weights) {
    BigInt common = 1;
    for (const auto &w : weights) {
        common = boost::multiprecision::lcm(common, BigInt(boost::multiprecision::denominator(w)));
    }
    return RationalAngle(Fraction(2 * common));
}

std::optional<RationalAngle> period(std::size_t p, const std::optional<Fraction> &c1_hat,
                                    const RationalAngle &rho0, const RationalAngle &rho1) {
    if (p == 0) {
        throw ConfigError("period needs p >= 1");
    }
    if (!c1_hat) {
        return std::nullopt;
    }
    const Fraction &c = *c1_hat;
    if (c <= 0 || c > 1) {
        throw ConfigError("c1_hat must lie in (0, 1]");
    }
    if (rho0.over_pi() <= 0 || rho1.over_pi() <= 0) {
        throw ConfigError("unitary periods rho0, rho1 must be positive");
    }
    const Fraction pf(static_cast<long long>(p));
    std::vector<Fraction> periods;
    periods.reserve(2 * p);
    for (std::size_t k = 1; k <= p; ++k) {
        const Fraction ramp = Fraction(static_cast<long long>(k)) * c / pf;
        const Fraction beta_hat = (c / pf) * (1 - ramp);
        const Fraction gamma_hat = (c / pf) * ramp;
        if (beta_hat != 0) {
            periods.push_back(rho0.over_pi() / beta_hat);
        }
        if (gamma_hat != 0) {
            periods.push_back(rho1.over_pi() / gamma_hat);
        }
    }
    return RationalAngle(lcm(periods));
}

Fraction tfim_c1_hat(const Fraction &bx) {
    if (bx <= -1) {
        throw ConfigError("Bx must exceed -1 for a positive normalization");
    }
    return Fraction(1) / (1 + bx);
}

double mirror_point(double anneal_time, double rho) {
    if (!(anneal_time >= 0.0 && anneal_time <= rho)) {
        throw ConfigError("mirror_point needs 0 <= T <= rho");
    }
    return rho - anneal_time;
}

} // namespace sqaoa
