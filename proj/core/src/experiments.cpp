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

#include "sqaoa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "sqaoa/errors.hpp"
#include "sqaoa/graph.hpp"
#include "sqaoa/parallel.hpp"
#include "sqaoa/statevector.hpp"

namespace sqaoa {

namespace {

std::vector<double> arange_inclusive(double lo, double hi, double step) {
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Round to 1e-12 so 0.1 + 3 * 0.05 prints as 0.25.
        out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return out;
}

double initial_energy(const TfimHamiltonian &h) {
    return energy(StateVector::minus_state(h.n_qubits()), h);
}

} // namespace

TfimHamiltonian make_torus_hamiltonian(const InstanceDescriptor &instance) {
    return TfimHamiltonian::tfim(
        build_j1j2_torus(instance.rows, instance.cols, instance.j1, instance.j2), instance.bx);
}

double relative_error(double energy, double ground_energy) {
    return std::abs(energy - ground_energy) / std::abs(ground_energy);
}

std::vector<ExperimentRecord> convergence_sweep(const TfimHamiltonian &h,
                                                const InstanceDescriptor &instance,
                                                const SpectrumResult &ground,
                                                const ConvergenceOptions &options) {
    if (options.p_max == 0) {
        throw ConfigError("convergence sweep needs p_max >= 1");
    }
    const double c1_hat = normalize(h).c1_hat;
    std::vector<ExperimentRecord> records;
    std::optional<ExperimentRecord> previous = options.previous;

    for (std::size_t p = std::max<std::size_t>(1, options.p_start); p <= options.p_max; ++p) {
        GridSearchOptions grid;
        grid.t_hi = static_cast<double>(p);
        grid.dt_step = options.dt_step;
        grid.workers = options.workers;
        const GridSearchResult gs = grid_search_T(h, p, grid);

        ExperimentRecord rec;
        rec.instance = instance;
        rec.p = p;
        rec.t_used = gs.t_star;
        rec.energy_unrefined = gs.energy;
        rec.ground_energy = ground.ground_energy;
        rec.gap = ground.gap;
        rec.rel_err = relative_error(gs.energy, ground.ground_energy);
        if (options.refine) {
            const RefineResult refined =
                refine_bfgs(h, make_schedule(p, gs.t_star, c1_hat), options.refine_options);
            rec.energy_refined = refined.energy;
            rec.rel_err_refined = relative_error(refined.energy, ground.ground_energy);
        }
        if (previous) {
            rec.non_monotone = rec.energy_unrefined > previous->energy_unrefined;
            if (rec.energy_refined && previous->energy_refined) {
                rec.non_monotone_refined = *rec.energy_refined > *previous->energy_refined;
            }
        }
        records.push_back(rec);
        previous = rec;
        if (options.on_record) {
            options.on_record(rec);
        }
        if (options.stop_epsilon) {
            const double err = options.refine ? *rec.rel_err_refined : rec.rel_err;
            if (err <= *options.stop_epsilon) {
                break;
            }
        }
    }
    return records;
}

std::optional<std::size_t> threshold_p(const TfimHamiltonian &h, const SpectrumResult &ground,
                                       const std::vector<ExperimentRecord> &records,
                                       double epsilon, bool refined) {
    if (relative_error(initial_energy(h), ground.ground_energy) <= epsilon) {
        return 0;
    }
    for (const auto &rec : records) {
        const std::optional<double> err = refined ? rec.rel_err_refined : rec.rel_err;
        if (err && *err <= epsilon) {
            return rec.p;
        }
    }
    return std::nullopt;
}

std::vector<double> default_j2_grid() { return arange_inclusive(0.0, 1.0, 0.05); }
std::vector<double> default_bx_grid() { return arange_inclusive(0.10, 2.0, 0.05); }

HeatmapResult threshold_heatmap(const HeatmapOptions &options) {
    if (!(options.epsilon > 0.0)) {
        throw ConfigError("heatmap epsilon must be positive");
    }
    if (options.p_cap == 0) {
        throw ConfigError("heatmap p_cap must be at least 1");
    }
    const std::size_t n_bx = options.bx_grid.size();
    const std::size_t n_cells = options.j2_grid.size() * n_bx;

    HeatmapResult result;
    result.cells.resize(n_cells);
    std::vector<std::vector<ExperimentRecord>> per_cell(n_cells);
    std::mutex emit_mutex;

    parallel_for(n_cells, options.workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t cell = begin; cell < end; ++cell) {
            const double j2 = options.j2_grid[cell / n_bx];
            const double bx = options.bx_grid[cell % n_bx];
            result.cells[cell] = {j2, bx, kNotReached};
            if (options.skip_cell && options.skip_cell(j2, bx)) {
                continue;
            }
            const InstanceDescriptor instance{options.rows, options.cols, options.j1, j2, bx};
            const TfimHamiltonian h = make_torus_hamiltonian(instance);
            const SpectrumResult ground = ground_spectrum(h);

            int min_p = kNotReached;
            if (relative_error(initial_energy(h), ground.ground_energy) <= options.epsilon) {
                min_p = 0;
            } else {
                ConvergenceOptions conv;
                conv.p_max = options.p_cap;
                conv.refine = options.refine;
                conv.dt_step = options.dt_step;
                conv.refine_options = options.refine_options;
                conv.stop_epsilon = options.epsilon;
                conv.workers = 1;
                per_cell[cell] = convergence_sweep(h, instance, ground, conv);
                if (const auto reached = threshold_p(h, ground, per_cell[cell], options.epsilon,
                                                     options.refine)) {
                    min_p = static_cast<int>(*reached);
                }
            }
            result.cells[cell].min_p = min_p;
            if (options.on_cell) {
                std::lock_guard lock(emit_mutex);
                options.on_cell(j2, bx, min_p, per_cell[cell]);
            }
        }
    });

    for (auto &records : per_cell) {
        result.records.insert(result.records.end(), records.begin(), records.end());
    }
    return result;
}

std::vector<std::pair<double, double>> energy_vs_T_curve(const TfimHamiltonian &h, std::size_t p,
                                                         double t_lo, double t_hi,
                                                         std::size_t samples,
                                                         std::size_t workers) {
    if (samples < 2) {
        throw ConfigError("energy curve needs at least 2 samples");
    }
    if (!(t_lo <= t_hi)) {
        throw ConfigError("energy curve needs t_lo <= t_hi");
    }
    std::vector<std::pair<double, double>> curve(samples);
    const double span = t_hi - t_lo;
    const auto last = static_cast<double>(samples - 1);
    parallel_for(samples, workers, [&](std::size_t begin, std::size_t end) {
        CircuitEvaluator evaluator(h);
        for (std::size_t i = begin; i < end; ++i) {
            const double t = i + 1 == samples ? t_hi : t_lo + span * static_cast<double>(i) / last;
            curve[i] = {t, evaluator.snapshot_energy(p, t)};
        }
    });
    return curve;
}

std::vector<std::pair<std::size_t, double>> fixed_T_curve(const TfimHamiltonian &h, double t,
                                                          const std::vector<std::size_t> &depths) {
    CircuitEvaluator evaluator(h);
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(depths.size());
    for (std::size_t p : depths) {
        out.emplace_back(p, evaluator.snapshot_energy(p, t));
    }
    return out;
}

RegressionResult regression_T_vs_p(const TfimHamiltonian &h, std::size_t p_max, double dt_step,
                                   std::size_t workers) {
    if (p_max < 2) {
        throw ConfigError("regression needs p_max >= 2");
    }
    std::vector<std::pair<double, double>> points;
    points.reserve(p_max);
    for (std::size_t p = 1; p <= p_max; ++p) {
        GridSearchOptions grid;
        grid.dt_step = dt_step;
        grid.workers = workers;
        points.emplace_back(static_cast<double>(p), grid_search_T(h, p, grid).t_star);
    }
    return linear_regression(points);
}

std::vector<PeriodPoint> period_scaling(const std::optional<Fraction> &c1_hat,
                                        const RationalAngle &rho0, const RationalAngle &rho1,
                                        std::size_t p_max) {
    std::vector<PeriodPoint> out;
    out.reserve(p_max);
    for (std::size_t p = 1; p <= p_max; ++p) {
        out.push_back({p, period(p, c1_hat, rho0, rho1)});
    }
    return out;
}

MaxCutReplication tqa_maxcut_replication(std::size_t n, std::size_t degree, std::uint64_t seed,
                                         std::size_t p, std::size_t t_samples, double t_max,
                                         std::size_t workers) {
    MaxCutReplication out;
    out.graph = build_random_regular(n, degree, seed);
    // c0 = 0: the target is purely diagonal, the mixer still drives the circuit.
    const TfimHamiltonian h(out.graph, 0.0, 1.0);
    const auto diag = h.diag_table();
    out.ground_energy = *std::min_element(diag.begin(), diag.end());
    const auto curve = energy_vs_T_curve(h, p, 0.0, t_max, t_samples, workers);
    out.points.reserve(curve.size());
    for (const auto &[t, e] : curve) {
        out.points.push_back({t, e, e / out.ground_energy + 0.0});  // + 0.0 folds -0 into 0
    }
    return out;
}

} // namespace sqaoa
