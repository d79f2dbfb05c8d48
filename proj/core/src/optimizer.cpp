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

#include "sqaoa/optimizer.hpp"

#include <cmath>
#include <string>

#include "sqaoa/errors.hpp"
#include "sqaoa/parallel.hpp"
#include "sqaoa/statevector.hpp"

namespace sqaoa {

std::vector<double> t_grid(double t_lo, double t_hi, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("grid step must be positive");
    }
    if (!(t_lo <= t_hi)) {
        throw ConfigError("grid needs t_lo <= t_hi");
    }
    const auto count = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = t_lo + static_cast<double>(i) * step;
    }
    return grid;
}

GridSearchResult grid_search_T(const TfimHamiltonian &h, std::size_t p,
                               const GridSearchOptions &options) {
    if (p == 0) {
        throw ConfigError("grid search needs p >= 1");
    }
    const double t_hi = options.t_hi.value_or(static_cast<double>(p));
    if (options.t_lo < 0.0) {
        throw ConfigError("grid search needs t_lo >= 0");
    }
    const std::vector<double> grid = t_grid(options.t_lo, t_hi, options.dt_step);
    std::vector<double> energies(grid.size());

    parallel_for(grid.size(), options.workers, [&](std::size_t begin, std::size_t end) {
        CircuitEvaluator evaluator(h);
        for (std::size_t i = begin; i < end; ++i) {
            energies[i] = evaluator.snapshot_energy(p, grid[i]);
        }
    });

    GridSearchResult result;
    result.t_lo = options.t_lo;
    result.t_hi = t_hi;
    result.dt_step = options.dt_step;
    result.evaluated_points = grid.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (energies[i] < energies[best]) {
            best = i;
        }
    }
    result.t_star = grid[best];
    result.energy = energies[best];
    if (options.keep_trace) {
        result.trace.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            result.trace.emplace_back(grid[i], energies[i]);
        }
    }
    return result;
}

EnergyGradient energy_and_gradient(const TfimHamiltonian &h, std::span<const double> betas,
                                   std::span<const double> gammas) {
    if (betas.size() != gammas.size()) {
        throw ConfigError("beta and gamma vectors differ in length");
    }
    const std::size_t p = betas.size();
    StateVector phi = run_circuit(h, betas, gammas);
    StateVector lambda(h.n_qubits(), matvec(h, phi.amplitudes()));

    EnergyGradient out;
    out.energy = energy(phi, h);
    out.grad.assign(2 * p, 0.0);

    const auto diag = h.diag_table();
    const std::size_t dim = h.dim();
    const std::size_t n = h.n_qubits();

    for (std::size_t k = p; k-- > 0;) {
        // phi is the state right after mixer k; generator H0 = sum X.
        {
            const auto f = phi.amplitudes();
            const auto l = lambda.amplitudes();
            double acc = 0.0;
            for (std::size_t q = 0; q < n; ++q) {
                const std::size_t bit = std::size_t{1} << q;
                for (std::size_t base = 0; base < dim; base += 2 * bit) {
                    for (std::size_t z = base; z < base + bit; ++z) {
                        acc += std::imag(std::conj(l[z]) * f[z | bit]) +
                               std::imag(std::conj(l[z | bit]) * f[z]);
                    }
                }
            }
            out.grad[k] = 2.0 * acc;
        }
        apply_mixer(phi, -betas[k]);
        apply_mixer(lambda, -betas[k]);

        // phi is now the state right after phase k; generator H1 = diag.
        {
            const auto f = phi.amplitudes();
            const auto l = lambda.amplitudes();
            double acc = 0.0;
            for (std::size_t z = 0; z < dim; ++z) {
                acc += diag[z] * std::imag(std::conj(l[z]) * f[z]);
            }
            out.grad[p + k] = 2.0 * acc;
        }
        apply_phase(phi, -gammas[k], h);
        apply_phase(lambda, -gammas[k], h);
    }
    return out;
}

RefineResult refine_bfgs(const TfimHamiltonian &h, const Schedule &init,
                         const RefineOptions &options) {
    const std::size_t p = init.betas.size();
    if (p == 0 || init.gammas.size() != p) {
        throw ConfigError("refine_bfgs needs length-p beta and gamma vectors");
    }
    std::vector<double> x0(2 * p);
    std::copy(init.betas.begin(), init.betas.end(), x0.begin());
    std::copy(init.gammas.begin(), init.gammas.end(), x0.begin() + static_cast<std::ptrdiff_t>(p));

    const Objective objective = [&](std::span<const double> x, std::span<double> grad) {
        const EnergyGradient eg = energy_and_gradient(h, x.first(p), x.subspan(p, p));
        std::copy(eg.grad.begin(), eg.grad.end(), grad.begin());
        return eg.energy;
    };

    BfgsOptions bfgs;
    bfgs.max_iter = options.max_iter;
    bfgs.grad_tol = options.grad_tol;

    RefineResult result;
    std::vector<double> start_grad(2 * p);
    result.start_energy = objective(x0, start_grad);

    const BfgsResult opt = minimize_bfgs(objective, x0, bfgs);
    result.betas.assign(opt.x.begin(), opt.x.begin() + static_cast<std::ptrdiff_t>(p));
    result.gammas.assign(opt.x.begin() + static_cast<std::ptrdiff_t>(p), opt.x.end());
    result.energy = opt.value;
    result.iterations = opt.iterations;
    result.grad_norm = opt.grad_norm;
    result.line_search_failed = opt.status == BfgsStatus::line_search_failed;
    result.monotone = result.energy <= result.start_energy;
    return result;
}

} // namespace sqaoa
