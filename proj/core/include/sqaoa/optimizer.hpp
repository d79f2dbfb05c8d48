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
#include <utility>
#include <vector>

#include "sqaoa/bfgs.hpp"
#include "sqaoa/hamiltonian.hpp"
#include "sqaoa/schedule.hpp"

namespace sqaoa {

struct GridSearchOptions {
    double t_lo = 0.0;
    /// Defaults to p.
    std::optional<double> t_hi;
    double dt_step = 0.01;
    bool keep_trace = false;
    /// 0 selects default_workers().
    std::size_t workers = 0;
};

struct GridSearchResult {
    double t_star = 0.0;
    double energy = 0.0;
    std::size_t evaluated_points = 0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double dt_step = 0.0;
    /// (T, energy) for every grid point when keep_trace is set.
    std::vector<std::pair<double, double>> trace;
};

/// Inclusive grid t_lo + i * step, i = 0..N with the last point within
/// rounding of t_hi. t_lo == t_hi gives the single point t_lo.
std::vector<double> t_grid(double t_lo, double t_hi, double step);

/**
 * Minimizes E_p(T) over the inclusive grid. Points are evaluated in parallel
 * and reduced deterministically: lowest energy wins, ties go to the smaller T.
 */
GridSearchResult grid_search_T(const TfimHamiltonian &h, std::size_t p,
                               const GridSearchOptions &options = {});

struct EnergyGradient {
    double energy = 0.0;
    /// dE/dbeta_1..p followed by dE/dgamma_1..p.
    std::vector<double> grad;
};

/**
 * Exact gradient of E(beta, gamma) by a reverse (adjoint) sweep: one forward
 * pass, one matvec, then each layer is undone on the state and on H|psi>
 * while accumulating 2 Im <lambda| G |phi> for the layer generator G.
 */
EnergyGradient energy_and_gradient(const TfimHamiltonian &h, std::span<const double> betas,
                                   std::span<const double> gammas);

inline std::vector<double> gradient(const TfimHamiltonian &h, std::span<const double> betas,
                                    std::span<const double> gammas) {
    return energy_and_gradient(h, betas, gammas).grad;
}

struct RefineOptions {
    std::size_t max_iter = 500;
    double grad_tol = 1e-8;
};

struct RefineResult {
    std::vector<double> betas;
    std::vector<double> gammas;
    double energy = 0.0;
    double start_energy = 0.0;
    std::size_t iterations = 0;
    double grad_norm = 0.0;
    /// energy <= start_energy (always true; the incumbent is kept otherwise).
    bool monotone = true;
    bool line_search_failed = false;
};

/// BFGS over all 2p angles starting from `init`, with adjoint gradients.
RefineResult refine_bfgs(const TfimHamiltonian &h, const Schedule &init,
                         const RefineOptions &options = {});

} // namespace sqaoa
