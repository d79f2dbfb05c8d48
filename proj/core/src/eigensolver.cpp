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

#include "sqaoa/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <span>
#include <sstream>

#include "sqaoa/errors.hpp"
#include "sqaoa/symmetric_eigen.hpp"

namespace sqaoa {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Two passes of classical Gram-Schmidt against every vector in `basis`.
void orthogonalize(std::span<double> w, const std::vector<std::vector<double>> &basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &q : basis) {
            axpy(-dot(q, w), q, w);
        }
    }
}

struct RitzPair {
    double value = 0.0;
    std::vector<double> vector;
    std::size_t iterations = 0;
    double residual = std::numeric_limits<double>::infinity();
};

bool should_check(std::size_t m) { return m <= 24 || m % 4 == 0; }

// Lowest eigenpair of H restricted to the complement of `deflate`.
RitzPair lowest_pair(const TfimHamiltonian &h, const std::vector<std::vector<double>> &deflate,
                     const LanczosOptions &options, std::uint64_t seed) {
    const std::size_t dim = h.dim();
    const std::size_t krylov_cap = std::min(options.max_iter, dim - deflate.size());
    if (krylov_cap == 0) {
        throw ConfigError("Lanczos: no room left in the Hilbert space after deflation");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> start(dim);
    for (auto &x : start) {
        x = gauss(rng);
    }
    orthogonalize(start, deflate);
    const double start_norm = norm(start);
    if (start_norm == 0.0) {
        throw NumericError("Lanczos: start vector vanished after deflation");
    }
    for (auto &x : start) {
        x /= start_norm;
    }

    // The reorthogonalization set is deflation vectors followed by the
    // Krylov basis.
    std::vector<std::vector<double>> basis = deflate;
    const std::size_t offset = basis.size();
    basis.push_back(std::move(start));

    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> w(dim);
    RitzPair best;
    std::vector<double> best_coeffs;

    const double scale_hint = std::abs(h.c0()) * static_cast<double>(h.n_qubits()) +
                              std::abs(h.c1()) * *std::max_element(
                                  h.diag_table().begin(), h.diag_table().end(),
                                  [](double a, double b) { return std::abs(a) < std::abs(b); });
    const double breakdown = 1e-13 * std::max(1.0, std::abs(scale_hint));

    for (std::size_t m = 1; m <= krylov_cap; ++m) {
        const auto &v = basis.back();
        apply_hamiltonian<double>(h, v, w);
        const double a = dot(v, w);
        alpha.push_back(a);
        orthogonalize(w, basis);
        const double b = norm(w);

        const bool invariant = b <= breakdown || m == krylov_cap;
        if (should_check(m) || invariant) {
            linalg::Tridiagonal t{alpha, std::vector<double>(beta.begin(), beta.end())};
            const auto eig = linalg::tridiagonal_eigen_ql(t);
            const double last = eig.vectors[(m - 1) * m + 0];
            const double residual = invariant && b <= breakdown ? 0.0 : b * std::abs(last);
            if (residual < best.residual) {
                best.value = eig.values[0];
                best.residual = residual;
                best.iterations = m;
                best_coeffs.assign(m, 0.0);
                for (std::size_t i = 0; i < m; ++i) {
                    best_coeffs[i] = eig.vectors[i * m + 0];
                }
            }
            if (residual <= options.tol || b <= breakdown) {
                break;
            }
        }
        if (m == krylov_cap) {
            break;
        }
        beta.push_back(b);
        for (auto &x : w) {
            x /= b;
        }
        basis.push_back(w);
    }

    best.vector.assign(dim, 0.0);
    for (std::size_t i = 0; i < best_coeffs.size(); ++i) {
        axpy(best_coeffs[i], basis[offset + i], best.vector);
    }
    const double vn = norm(best.vector);
    for (auto &x : best.vector) {
        x /= vn;
    }

    // Report the true residual of the assembled Ritz vector.
    apply_hamiltonian<double>(h, best.vector, w);
    axpy(-best.value, best.vector, w);
    orthogonalize(w, deflate);
    const double true_residual = norm(w);
    best.residual = std::max(best.residual, true_residual);

    if (best.residual > options.tol) {
        std::ostringstream msg;
        msg << "Lanczos did not converge in " << best.iterations << " iterations (best residual "
            << best.residual << ", tol " << options.tol << ")";
        throw ConvergenceError(msg.str(), best.residual);
    }
    return best;
}

} // namespace

SpectrumResult ground_spectrum(const TfimHamiltonian &h, const LanczosOptions &options) {
    if (!(options.tol > 0.0)) {
        throw ConfigError("Lanczos tolerance must be positive");
    }
    RitzPair ground = lowest_pair(h, {}, options, options.seed);

    SpectrumResult result;
    result.ground_energy = ground.value;
    result.iterations = ground.iterations;
    result.residual = ground.residual;

    if (h.dim() > 1) {
        RitzPair excited = lowest_pair(h, {ground.vector}, options, options.seed + 1);
        result.first_excited_energy = excited.value;
        result.iterations += excited.iterations;
    } else {
        result.first_excited_energy = ground.value;
    }
    result.gap = std::max(0.0, result.first_excited_energy - result.ground_energy);
    result.near_degenerate = result.gap < 10.0 * options.tol;
    if (options.want_ground_state) {
        result.ground_state = std::move(ground.vector);
    }
    return result;
}

std::vector<double> dense_spectrum_oracle(const TfimHamiltonian &h) {
    if (h.n_qubits() > 12) {
        throw ConfigError("dense spectrum oracle is limited to 12 qubits (got " +
                          std::to_string(h.n_qubits()) + ")");
    }
    const std::size_t dim = h.dim();
    std::vector<double> dense(dim * dim);
    std::vector<double> basis(dim, 0.0);
    std::vector<double> column(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        basis[j] = 1.0;
        apply_hamiltonian<double>(h, basis, column);
        basis[j] = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            dense[i * dim + j] = column[i];
        }
    }
    return linalg::symmetric_eigenvalues(std::move(dense), dim);
}

AnnealGapReport min_gap_along_anneal(const TfimHamiltonian &h, std::size_t samples,
                                     const LanczosOptions &options) {
    if (samples < 2) {
        throw ConfigError("min_gap_along_anneal needs at least 2 samples");
    }
    AnnealGapReport report{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < samples; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(samples - 1);
        const TfimHamiltonian snapshot(h.graph(), 1.0 - s, s);
        const SpectrumResult spectrum = ground_spectrum(snapshot, options);
        if (spectrum.gap < report.min_gap) {
            report = {spectrum.gap, s};
        }
    }
    return report;
}

} // namespace sqaoa
