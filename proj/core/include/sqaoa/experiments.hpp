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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sqaoa/eigensolver.hpp"
#include "sqaoa/hamiltonian.hpp"
#include "sqaoa/optimizer.hpp"
#include "sqaoa/regression.hpp"
#include "sqaoa/schedule.hpp"

namespace sqaoa {

/// J1-J2 torus instance. The default is the desk-scale 3x3 lattice.
struct InstanceDescriptor {
    std::size_t rows = 3;
    std::size_t cols = 3;
    double j1 = 1.0;
    double j2 = 0.0;
    double bx = 1.0;

    friend bool operator==(const InstanceDescriptor &, const InstanceDescriptor &) = default;
};

TfimHamiltonian make_torus_hamiltonian(const InstanceDescriptor &instance);

/// |E - E_H| / |E_H|.
double relative_error(double energy, double ground_energy);

struct ExperimentRecord {
    InstanceDescriptor instance;
    std::size_t p = 0;
    double t_used = 0.0;
    double energy_unrefined = 0.0;
    std::optional<double> energy_refined;
    double ground_energy = 0.0;
    double gap = 0.0;
    double rel_err = 0.0;
    std::optional<double> rel_err_refined;
    /// E(p) > E(p - 1) for the unrefined / refined series.
    bool non_monotone = false;
    bool non_monotone_refined = false;
};

struct ConvergenceOptions {
    std::size_t p_max = 20;
    bool refine = false;
    double dt_step = 0.01;
    RefineOptions refine_options;
    /// Stop after the first p whose (refined, when refining) rel_err is at or
    /// below this threshold.
    std::optional<double> stop_epsilon;
    /// Skip p < p_start (resuming); `previous` seeds the monotonicity flags.
    std::size_t p_start = 1;
    std::optional<ExperimentRecord> previous;
    std::size_t workers = 0;
    /// Called once per finished record, in p order.
    std::function<void(const ExperimentRecord &)> on_record;
};

/**
 * For p = p_start..p_max: grid-search T over [0, p], record E_p(T*~), and
 * optionally refine all angles with BFGS from that schedule.
 */
std::vector<ExperimentRecord> convergence_sweep(const TfimHamiltonian &h,
                                                const InstanceDescriptor &instance,
                                                const SpectrumResult &ground,
                                                const ConvergenceOptions &options);

/// Smallest p whose record meets epsilon (refined series if `refined`), 0
/// when the initial state already does, nullopt if never reached.
std::optional<std::size_t> threshold_p(const TfimHamiltonian &h, const SpectrumResult &ground,
                                       const std::vector<ExperimentRecord> &records,
                                       double epsilon, bool refined);

inline constexpr int kNotReached = -1;

struct HeatmapOptions {
    std::vector<double> j2_grid;
    std::vector<double> bx_grid;
    std::size_t rows = 3;
    std::size_t cols = 3;
    double j1 = 1.0;
    double epsilon = 0.01;
    std::size_t p_cap = 250;
    bool refine = false;
    double dt_step = 0.01;
    RefineOptions refine_options;
    std::size_t workers = 0;
    /// Cells already computed (resume); they are skipped.
    std::function<bool(double j2, double bx)> skip_cell;
    /// Serialized: never called concurrently.
    std::function<void(double j2, double bx, int min_p, const std::vector<ExperimentRecord> &)>
        on_cell;
};

struct HeatmapCell {
    double j2 = 0.0;
    double bx = 0.0;
    int min_p = kNotReached;
};

struct HeatmapResult {
    /// Row-major over (j2, bx): cells[i * bx_grid.size() + j].
    std::vector<HeatmapCell> cells;
    std::vector<ExperimentRecord> records;
};

/// Default axes: J2 in {0.00, 0.05, ..., 1.00}, Bx in {0.10, 0.15, ..., 2.00}.
std::vector<double> default_j2_grid();
std::vector<double> default_bx_grid();

HeatmapResult threshold_heatmap(const HeatmapOptions &options);

/// E_p(T) at `samples` linearly spaced T in [t_lo, t_hi], endpoints included.
std::vector<std::pair<double, double>> energy_vs_T_curve(const TfimHamiltonian &h, std::size_t p,
                                                         double t_lo, double t_hi,
                                                         std::size_t samples,
                                                         std::size_t workers = 0);

/// E_p(T) for each p in `depths`, T fixed.
std::vector<std::pair<std::size_t, double>> fixed_T_curve(const TfimHamiltonian &h, double t,
                                                          const std::vector<std::size_t> &depths);

/// T*~(p) for p = 1..p_max by grid search, then OLS of T*~ against p.
RegressionResult regression_T_vs_p(const TfimHamiltonian &h, std::size_t p_max,
                                   double dt_step = 0.01, std::size_t workers = 0);

struct PeriodPoint {
    std::size_t p;
    std::optional<RationalAngle> rho;
};

std::vector<PeriodPoint> period_scaling(const std::optional<Fraction> &c1_hat,
                                        const RationalAngle &rho0, const RationalAngle &rho1,
                                        std::size_t p_max);

struct MaxCutPoint {
    double t;
    double energy;
    double approx_ratio;
};

struct MaxCutReplication {
    WeightedGraph graph;
    double ground_energy = 0.0;
    std::vector<MaxCutPoint> points;
};

/**
 * Trotterized annealing (c1_hat = 1) on H = sum_(i,j) Z_i Z_j over a random
 * regular graph; ratio = <H> / E_H at `t_samples` T values in [0, t_max].
 */
MaxCutReplication tqa_maxcut_replication(std::size_t n = 12, std::size_t degree = 3,
                                         std::uint64_t seed = 7, std::size_t p = 5,
                                         std::size_t t_samples = 501, double t_max = 5.0,
                                         std::size_t workers = 0);

} // namespace sqaoa
