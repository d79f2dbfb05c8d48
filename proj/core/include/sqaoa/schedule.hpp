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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqaoa/rational.hpp"

namespace sqaoa {

/**
 * Trotterized partial linear anneal: with tau = c1_hat T and dt = tau / p,
 *
 *     beta_k  = dt (1 - k c1_hat / p)
 *     gamma_k = dt (k c1_hat / p),          k = 1..p,
 *
 * so beta_k + gamma_k = dt for every layer and beta_p vanishes when
 * c1_hat = 1 (plain Trotterized annealing).
 */
struct Schedule {
    std::size_t p = 0;
    double anneal_time = 0.0;
    double tau = 0.0;
    double dt = 0.0;
    std::vector<double> betas;
    std::vector<double> gammas;

    /// The schedule at -T: every angle negated.
    [[nodiscard]] Schedule negated() const;
};

/// Requires p >= 1, 0 < c1_hat <= 1 and T >= 0.
Schedule make_schedule(std::size_t p, double anneal_time, double c1_hat);

/// A rational multiple of pi, (num / den) * pi, kept in lowest terms.
class RationalAngle {
  public:
    RationalAngle() = default;
    explicit RationalAngle(Fraction multiple_of_pi);

    [[nodiscard]] const Fraction &over_pi() const noexcept { return value_; }
    [[nodiscard]] BigInt num() const;
    [[nodiscard]] BigInt den() const;
    [[nodiscard]] double radians() const;
    /// "num/den", the coefficient of pi.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RationalAngle &, const RationalAngle &) = default;

  private:
    Fraction value_{0};
};

/// Period of exp(-i beta sum X) as far as energies are concerned: pi/2.
RationalAngle default_rho0();

/// pi/2 times the reduced denominator b of J2 = a/b, valid for the J1-J2
/// torus with J1 = 1. J2 = 0 gives pi/2.
RationalAngle default_rho1(const Fraction &j2);

/// 2 pi L for a diagonal Hamiltonian whose weights are all multiples of 1/L.
RationalAngle rho1_for_weights(std::span<const Fraction> weights);

/**
 * A T-period of E_p(T): the LCM of rho0 / beta_hat_k and rho1 / gamma_hat_k
 * over k, where beta_hat, gamma_hat are the T = 1 schedule values computed
 * exactly. Coefficients that are exactly zero are skipped. Returns nullopt
 * ("period unavailable") when c1_hat has no exact rational value.
 */
std::optional<RationalAngle> period(std::size_t p, const std::optional<Fraction> &c1_hat,
                                    const RationalAngle &rho0, const RationalAngle &rho1);

/// 1 / (1 + Bx), exactly.
Fraction tfim_c1_hat(const Fraction &bx);

/// rho - T. Requires 0 <= T <= rho.
double mirror_point(double anneal_time, double rho);

} // namespace sqaoa
