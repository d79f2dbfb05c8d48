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
#include "sqaoa/errors.hpp"
#include "sqaoa/hamiltonian.hpp"

namespace sqaoa {
namespace {

std::vector<complex_t> random_vector(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<complex_t> v(dim);
    for (auto &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

TEST(DiagEnergies, QubitZeroIsLeastSignificantBit) {
    const WeightedGraph g(3, {{0, 1, 1.0}});
    const auto d = diag_energies(g);
    // z = 0b001 flips qubit 0 only; z = 0b100 flips qubit 2 (not on the edge).
    EXPECT_EQ(d[0], 1.0);
    EXPECT_EQ(d[1], -1.0);
    EXPECT_EQ(d[2], -1.0);
    EXPECT_EQ(d[3], 1.0);
    EXPECT_EQ(d[4], 1.0);
}

TEST(DiagEnergies, MatchesKroneckerDiagonal) {
    std::mt19937_64 rng(3);
    const auto g = oracle::random_weighted_graph(6, 0.6, -1.0, 1.0, rng);
    const auto dense = oracle::dense_h1(g);
    const auto d = diag_energies(g);
    for (std::size_t z = 0; z < d.size(); ++z) {
        EXPECT_NEAR(d[z], dense(z, z).real(), 1e-14);
    }
}

TEST(DiagEnergies, MinimumMatchesBruteForceSpins) {
    const auto g = build_j1j2_torus(3, 3, 1.0, 0.6);
    const auto d = diag_energies(g);
    EXPECT_NEAR(*std::min_element(d.begin(), d.end()), oracle::brute_force_ising_min(g), 1e-12);
}

TEST(DiagEnergies, QubitCapReportsMemory) {
    const WeightedGraph g(30, {{0, 1, 1.0}});
    try {
        diag_energies(g, 26);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("GiB"), std::string::npos) << e.what();
    }
}

TEST(DiagLevels, IndexReproducesTable) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.5), 1.0);
    const auto &levels = h.diag_levels();
    ASSERT_FALSE(levels.values.empty());
    const auto diag = h.diag_table();
    for (std::size_t z = 0; z < diag.size(); ++z) {
        EXPECT_EQ(levels.values[levels.index[z]], diag[z]);
    }
}

TEST(TfimHamiltonian, RejectsNonPositiveCoefficientSum) {
    const WeightedGraph g(2, {{0, 1, 1.0}});
    EXPECT_THROW(TfimHamiltonian(g, 0.0, 0.0), ConfigError);
    EXPECT_THROW(TfimHamiltonian(g, -1.0, 0.5), ConfigError);
    EXPECT_THROW(TfimHamiltonian(g, NAN, 1.0), ConfigError);
}

TEST(Normalize, CoefficientsSumToOne) {
    const auto v = normalize(3.0, 1.0);
    EXPECT_DOUBLE_EQ(v.c0_hat, 0.75);
    EXPECT_DOUBLE_EQ(v.c1_hat, 0.25);
    EXPECT_DOUBLE_EQ(v.tau(8.0), 2.0);
    EXPECT_THROW(normalize(0.0, 0.0), ConfigError);
}

TEST(Matvec, MatchesDenseKroneckerHamiltonian) {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
        const auto g = n == 1 ? WeightedGraph(1, {})
                              : oracle::random_weighted_graph(n, 0.7, -2.0, 2.0, rng);
        const double c0 = 0.7;
        const double c1 = 1.3;
        const TfimHamiltonian h(g, c0, c1);
        const auto dense = oracle::dense_h0(n);
        const auto full = oracle::scaled(dense, c0) + oracle::scaled(oracle::dense_h1(g), c1);
        const auto v = random_vector(h.dim(), rng);
        const auto got = matvec(h, v);
        const auto want = oracle::mul_vec(full, v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            EXPECT_NEAR(std::abs(got[i] - want[i]), 0.0, 1e-12) << "n=" << n << " i=" << i;
        }
    }
}

TEST(Matvec, RejectsLengthMismatch) {
    const auto h = TfimHamiltonian::tfim(WeightedGraph(2, {{0, 1, 1.0}}), 1.0);
    std::vector<complex_t> v(3);
    EXPECT_THROW(matvec(h, v), ConfigError);
}

TEST(Matvec, IsHermitian) {
    std::mt19937_64 rng(5);
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.4), 0.8);
    const auto x = random_vector(h.dim(), rng);
    const auto y = random_vector(h.dim(), rng);
    const auto hx = matvec(h, x);
    const auto hy = matvec(h, y);
    complex_t lhs{};
    complex_t rhs{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        lhs += std::conj(y[i]) * hx[i];
        rhs += std::conj(hy[i]) * x[i];
    }
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
}

TEST(SnapshotResidual, VanishesAtTau) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.35), 1.7);
    for (double t : {0.5, 3.0, 40.0}) {
        EXPECT_LE(snapshot_residual(h, t, 4, 9), 1e-12) << "T=" << t;
    }
}

TEST(SnapshotResidual, DetectsShiftedTau) {
    const auto h = TfimHamiltonian::tfim(build_j1j2_torus(3, 3, 1.0, 0.35), 1.7);
    EXPECT_GT(snapshot_residual(h, 3.0, 4, 9, 0.05), 1e-3);
}

} // namespace
} // namespace sqaoa
