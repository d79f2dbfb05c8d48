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
#include <cstdint>
#include <vector>

#include "sqaoa/hamiltonian.hpp"

namespace sqaoa {

struct LanczosOptions {
    double tol = 1e-10;
    std::size_t max_iter = 500;
    std::uint64_t seed = 0x5eed;
    bool want_ground_state = false;
};

struct SpectrumResult {
    double ground_energy = 0.0;
    double first_excited_energy = 0.0;
    double gap = 0.0;
    std::size_t iterations = 0;
    /// ||H x - E x|| for the returned ground Ritz pair.
    double residual = 0.0;
    /// gap < 10 * tol: the two lowest levels are not resolved from each other.
    bool near_degenerate = false;
    /// Filled when LanczosOptions::want_ground_state is set.
    std::vector<double> ground_state;
};

/**
 * Two lowest eigenvalues of H by matrix-free Lanczos with full
 * reorthogonalization.
 *
 * The ground pair comes from a Lanczos run on a seeded random start vector;
 * the first excited level is the lowest eigenvalue of H on the orthogonal
 * complement of the converged ground vector (a second, deflated run), so
 * degenerate ground states yield gap ~ 0 rather than the next distinct level.
 * Throws ConvergenceError (carrying the best residual) when max_iter is hit.
 */
SpectrumResult ground_spectrum(const TfimHamiltonian &h, const LanczosOptions &options = {});

/// Every eigenvalue of H, ascending, from the dense 2^n x 2^n matrix
/// (Householder tridiagonalization + bisection). n <= 12.
std::vector<double> dense_spectrum_oracle(const TfimHamiltonian &h);

struct AnnealGapReport {
    double min_gap;
    double at_fraction; ///< t / T where the minimum occurred
};

/// Diagnostic for the no-level-crossing requirement: smallest gap of
/// (1 - s) H0 + s H1 over `samples` equally spaced s in [0, 1].
AnnealGapReport min_gap_along_anneal(const TfimHamiltonian &h, std::size_t samples,
                                     const LanczosOptions &options = {});

} // namespace sqaoa
