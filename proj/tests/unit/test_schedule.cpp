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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sqaoa/errors.hpp"
#include "sqaoa/schedule.hpp"

namespace sqaoa {
namespace {

TEST(MakeSchedule, SingleLayerTqa) {
    const auto s = make_schedule(1, 1.0, 1.0);
    EXPECT_EQ(s.betas, std::vector<double>{0.0});
    EXPECT_EQ(s.gammas, std::vector<double>{1.0});
}

TEST(MakeSchedule, TwoLayersHalfNormalization) {
    const auto s = make_schedule(2, 2.0, 0.5);
    EXPECT_DOUBLE_EQ(s.tau, 1.0);
    EXPECT_DOUBLE_EQ(s.dt, 0.5);
    EXPECT_DOUBLE_EQ(s.betas[0], 0.375);
    EXPECT_DOUBLE_EQ(s.betas[1], 0.25);
    EXPECT_DOUBLE_EQ(s.gammas[0], 0.125);
    EXPECT_DOUBLE_EQ(s.gammas[1], 0.25);
}

TEST(MakeSchedule, ScaledAnglesAreComplementaryLinearRamps) {
    for (double c : {0.3, 0.7, 1.0}) {
        const auto s = make_schedule(20, 1.0, c);
        for (std::size_t k = 0; k < 20; ++k) {
            EXPECT_NEAR(s.betas[k] / s.dt + s.gammas[k] / s.dt, 1.0, 1e-15);
            EXPECT_NEAR(s.gammas[k] / s.dt, static_cast<double>(k + 1) * c / 20.0, 1e-15);
            if (k > 0) {
                EXPECT_GE(s.gammas[k], s.gammas[k - 1]);
                EXPECT_LE(s.betas[k], s.betas[k - 1]);
            }
        }
        EXPECT_NEAR(s.betas.back(), s.dt * (1.0 - c), 1e-16);
    }
}

TEST(MakeSchedule, RejectsBadArguments) {
    EXPECT_THROW(make_schedule(0, 1.0, 0.5), ConfigError);
    EXPECT_THROW(make_schedule(1, -1.0, 0.5), ConfigError);
    EXPECT_THROW(make_schedule(1, 1.0, 0.0), ConfigError);
    EXPECT_THROW(make_schedule(1, 1.0, 1.5), ConfigError);
    EXPECT_THROW(make_schedule(1, NAN, 0.5), ConfigError);
}

TEST(Schedule, NegatedFlipsEveryAngle) {
    const auto s = make_schedule(3, 2.0, 0.4);
    const auto n = s.negated();
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(n.betas[k], -s.betas[k]);
        EXPECT_EQ(n.gammas[k], -s.gammas[k]);
    }
    EXPECT_EQ(n.anneal_time, -2.0);
}

TEST(RationalAngle, KeepsLowestTerms) {
    const RationalAngle a(Fraction(6, 4));
    EXPECT_EQ(a.num(), 3);
    EXPECT_EQ(a.den(), 2);
    EXPECT_EQ(a.str(), "3/2");
    EXPECT_DOUBLE_EQ(a.radians(), 1.5 * std::numbers::pi);
}

TEST(Period, HalfNormalizationSingleLayer) {
    const auto rho = period(1, Fraction(1, 2), default_rho0(), RationalAngle(Fraction(2)));
    ASSERT_TRUE(rho.has_value());
    EXPECT_EQ(rho->over_pi(), Fraction(8));
}

TEST(Period, TqaSkipsVanishingMixerAngle) {
    const auto rho = period(1, Fraction(1), default_rho0(), RationalAngle(Fraction(2)));
    ASSERT_TRUE(rho.has_value());
    EXPECT_EQ(rho->over_pi(), Fraction(2));
}

TEST(Period, TwoLayers) {
    // beta_hat = {3/16, 1/8}, gamma_hat = {1/16, 1/8}: lcm(8/3, 4, 32, 16) = 32.
    const auto rho = period(2, Fraction(1, 2), default_rho0(), RationalAngle(Fraction(2)));
    EXPECT_EQ(rho->over_pi(), Fraction(32));
}

TEST(Period, UnavailableWithoutExactNormalization) {
    EXPECT_FALSE(period(3, std::nullopt, default_rho0(), default_rho0()).has_value());
}

TEST(Period, RejectsBadInputs) {
    EXPECT_THROW(period(0, Fraction(1, 2), default_rho0(), default_rho0()), ConfigError);
    EXPECT_THROW(period(1, Fraction(3, 2), default_rho0(), default_rho0()), ConfigError);
    EXPECT_THROW(period(1, Fraction(1, 2), RationalAngle(Fraction(0)), default_rho0()),
                 ConfigError);
}

TEST(Period, IsAMultipleOfEveryUnitaryPeriod) {
    const Fraction c(2, 7);
    const std::size_t p = 5;
    const auto rho = period(p, c, default_rho0(), RationalAngle(Fraction(3, 2)));
    for (std::size_t k = 1; k <= p; ++k) {
        const Fraction ramp = Fraction(static_cast<long long>(k)) * c / static_cast<long long>(p);
        const Fraction beta_hat = c / static_cast<long long>(p) * (1 - ramp);
        const Fraction gamma_hat = c / static_cast<long long>(p) * ramp;
        // rho * beta_hat must be an integer multiple of rho0 (likewise gamma).
        EXPECT_EQ(boost::multiprecision::denominator(rho->over_pi() * beta_hat / Fraction(1, 2)), 1);
        EXPECT_EQ(boost::multiprecision::denominator(rho->over_pi() * gamma_hat / Fraction(3, 2)), 1);
    }
}

TEST(DefaultRho, FollowsJ2Denominator) {
    EXPECT_EQ(default_rho0().over_pi(), Fraction(1, 2));
    EXPECT_EQ(default_rho1(Fraction(0)).over_pi(), Fraction(1, 2));
    EXPECT_EQ(default_rho1(Fraction(3, 4)).over_pi(), Fraction(2));
    EXPECT_EQ(default_rho1(Fraction(1, 2)).over_pi(), Fraction(1));
}

TEST(RhoForWeights, TwoPiTimesCommonDenominator) {
    const std::vector<Fraction> w = {Fraction(1, 2), Fraction(-1, 3), Fraction(1)};
    EXPECT_EQ(rho1_for_weights(w).over_pi(), Fraction(12));
    const std::vector<Fraction> ints = {Fraction(1), Fraction(-2)};
    EXPECT_EQ(rho1_for_weights(ints).over_pi(), Fraction(2));
}

TEST(TfimC1Hat, IsOneOverOnePlusBx) {
    EXPECT_EQ(tfim_c1_hat(Fraction(1)), Fraction(1, 2));
    EXPECT_EQ(tfim_c1_hat(Fraction(0)), Fraction(1));
    EXPECT_EQ(tfim_c1_hat(Fraction(1, 2)), Fraction(2, 3));
}

TEST(MirrorPoint, ReflectsWithinPeriod) {
    EXPECT_DOUBLE_EQ(mirror_point(0.0, 4.0), 4.0);
    EXPECT_DOUBLE_EQ(mirror_point(2.0, 4.0), 2.0);
    EXPECT_THROW(mirror_point(5.0, 4.0), ConfigError);
    EXPECT_THROW(mirror_point(-1.0, 4.0), ConfigError);
}

} // namespace
} // namespace sqaoa
