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
#include <random>

#include "oracles.hpp"
#include "sqaoa/eigensolver.hpp"
#include "sqaoa/errors.hpp"

namespace sqaoa {
namespace {

TEST(GroundSpectrum, TwoQubitClosedForm) {
    // H = Bx (X0 + X1) + Z0 Z1 has ground energy -sqrt(1 + 4 Bx^2).
    const double bx = 0.8;
    const auto h = TfimHamiltonian::tfim(WeightedGraph(2, {{0, 1, 1.0}}), bx);
    const auto s = ground_spectrum(h);
    EXPECT_NEAR(s.ground_energy, -std::sqrt(1.0 + 4.0 * bx * bx), 1e-10);
    EXPECT_GT(s.gap, 0.0);
    EXPECT_LE(s.residual, 1e-9);
}

TEST(GroundSpectrum, PureFieldGivesMinusNBx) {
    const auto h = TfimHamiltonian(build_j1j2_torus(3, 3, 1.0, 0.0), 1.5, 1e-9);
    const auto s = ground_spectrum(h);
    EXPECT_NEAR(s.ground_energy, -9 * 1.5, 1e-6);
}

TEST(GroundSpectrum, ZeroFieldMatchesBruteForceSpins) {
    const auto g = build_j1j2_torus(3, 3, 1.0, 0.7);
    const TfimHamiltonian h(g, 0.0, 1.0);
    const auto s = ground_spectrum(h);
    EXPECT_NEAR(s.ground_energy, oracle::brute_force_ising_min(g), 1e-9);
}

TEST(GroundSpectrum, DegenerateGroundStateGivesZeroGap) {
    // Ferromagnet without field: all-up and all-down are degenerate.
    const TfimHamiltonian h(build_j1j2_torus(3, 3, 1.0, 0.0), 0.0, 1.0);
    const auto s = ground_spectrum(h);
    EXPECT_NEAR(s.gap, 0.0, 1e-8);
    EXPECT_TRUE(s.near_degenerate);
}

TEST(GroundSpectrum, AgreesWithDenseOracleOnRandomGraphs) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> field(0.05, 2.0);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial);
        const auto g = oracle::random_weighted_graph(n, 0.6, -1.0, 1.0, rng);
        const auto h = TfimHamiltonian::tfim(g, field(rng));
        const auto s = ground_spectrum(h);
        const auto dense = dense_spectrum_oracle(h);
        EXPECT_NEAR(s.ground_energy, dense[0], 1e-9) << "trial " << trial;
        EXPECT_NEAR(s.first_excited_energy, dense[1], 1e-7) << "trial " << trial;
    }
}

TEST(GroundSpectrum, GroundVectorIsNormalizedEigenvector) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.5), 1.0);
    LanczosOptions opts;
    opts.want_ground_state = true;
    const auto s = ground_spectrum(h, opts);
    ASSERT_EQ(s.ground_state.size(), h.dim());
    std::vector<double> hv(h.dim());
    apply_hamiltonian<double>(h, s.ground_state, hv);
    double norm2 = 0.0;
    double resid2 = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        norm2 += s.ground_state[i] * s.ground_state[i];
        const double r = hv[i] - s.ground_energy * s.ground_state[i];
        resid2 += r * r;
    }
    EXPECT_NEAR(norm2, 1.0, 1e-12);
    EXPECT_LE(std::sqrt(resid2), 1e-8);
}

TEST(GroundSpectrum, SeedDoesNotChangeTheAnswer) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.3), 0.6);
    LanczosOptions a;
    LanczosOptions b;
    b.seed = 12345;
    EXPECT_NEAR(ground_spectrum(h, a).ground_energy, ground_spectrum(h, b).ground_energy, 1e-10);
}

TEST(GroundSpectrum, IterationCapRaisesWithResidual) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.5), 1.0);
    LanczosOptions opts;
    opts.max_iter = 3;
    try {
        ground_spectrum(h, opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError &e) {
        EXPECT_GT(e.best_residual(), 0.0);
    }
}

TEST(DenseOracle, RejectsLargeRegisters) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(4, 4, 1.0, 0.0), 1.0);
    EXPECT_THROW(dense_spectrum_oracle(h), ConfigError);
}

TEST(DenseOracle, MatchesJacobiOfKroneckerMatrix) {
    std::mt19937_64 rng(4);
    const auto g = oracle::random_weighted_graph(4, 0.8, -1.0, 1.0, rng);
    const auto h = TfimHamiltonian::tfim(g, 0.9);
    const auto dense = oracle::scaled(oracle::dense_h0(4), 0.9) + oracle::dense_h1(g);
    std::vector<double> a(dense.data.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = dense.data[i].real();
    }
    const auto want = oracle::jacobi_eigenvalues(a, 16);
    const auto got = dense_spectrum_oracle(h);
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(got[i], want[i], 1e-11);
    }
}

TEST(AnnealGap, ReportsFractionInUnitInterval) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.2), 2.0);
    const auto report = min_gap_along_anneal(h, 5);
    EXPECT_GE(report.at_fraction, 0.0);
    EXPECT_LE(report.at_fraction, 1.0);
    EXPECT_GE(report.min_gap, 0.0);
}

} // namespace
} // namespace sqaoa
