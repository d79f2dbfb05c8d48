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

#include "sqaoa/statevector.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <string>

#include "sqaoa/errors.hpp"
#include "sqaoa/schedule.hpp"

namespace sqaoa {

namespace {

std::size_t checked_dim(std::size_t n_qubits, std::size_t qubit_cap) {
    if (n_qubits == 0) {
        throw ConfigError("state vector needs at least one qubit");
    }
    if (n_qubits > qubit_cap || n_qubits >= 63) {
        throw ConfigError(std::to_string(n_qubits) + " qubits exceeds the cap of " +
                          std::to_string(qubit_cap) + " (" +
                          std::to_string(std::ldexp(16.0, static_cast<int>(std::min<std::size_t>(
                                                              n_qubits, 62))) /
                                         (1024.0 * 1024.0 * 1024.0)) +
                          " GiB of amplitudes)");
    }
    return std::size_t{1} << n_qubits;
}

void check_sizes(const StateVector &psi, const TfimHamiltonian &h) {
    if (psi.dim() != h.dim()) {
        throw ConfigError("state has " + std::to_string(psi.n_qubits()) +
                          " qubits but the Hamiltonian acts on " + std::to_string(h.n_qubits()));
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits, std::size_t qubit_cap)
    : n_qubits_(n_qubits), amps_(checked_dim(n_qubits, qubit_cap)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<complex_t> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits_ == 0 || n_qubits_ >= 63 || amps_.size() != (std::size_t{1} << n_qubits_)) {
        throw ConfigError("amplitude count does not match 2^" + std::to_string(n_qubits_));
    }
}

StateVector StateVector::minus_state(std::size_t n_qubits, std::size_t qubit_cap) {
    const std::size_t dim = checked_dim(n_qubits, qubit_cap);
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<complex_t> amps(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        amps[z] = (std::popcount(z) & 1U) ? -a : a;
    }
    return {n_qubits, std::move(amps)};
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::size_t z) {
    StateVector psi(n_qubits);
    if (z >= psi.dim()) {
        throw ConfigError("basis index out of range");
    }
    psi.amps_[0] = 0.0;
    psi.amps_[z] = 1.0;
    return psi;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void apply_phase(StateVector &psi, double gamma, std::span<const double> diag) {
    if (diag.size() != psi.dim()) {
        throw ConfigError("phase table length does not match the state");
    }
    auto amps = psi.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        const double angle = -gamma * diag[z];
        amps[z] *= complex_t(std::cos(angle), std::sin(angle));
    }
}

void apply_phase(StateVector &psi, double gamma, const TfimHamiltonian &h) {
    check_sizes(psi, h);
    const DiagLevels &levels = h.diag_levels();
    if (levels.values.empty()) {
        apply_phase(psi, gamma, h.diag_table());
        return;
    }
    thread_local std::vector<complex_t> factors;
    factors.resize(levels.values.size());
    for (std::size_t l = 0; l < factors.size(); ++l) {
        const double angle = -gamma * levels.values[l];
        factors[l] = complex_t(std::cos(angle), std::sin(angle));
    }
    auto amps = psi.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] *= factors[levels.index[z]];
    }
}

void apply_mixer(StateVector &psi, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    auto amps = psi.amplitudes();
    const std::size_t dim = amps.size();
    for (std::size_t q = 0; q < psi.n_qubits(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t z = base; z < base + bit; ++z) {
                const complex_t a = amps[z];
                const complex_t b = amps[z | bit];
                // (-i s) x = s * (x.imag, -x.real)
                amps[z] = complex_t(c * a.real() + s * b.imag(), c * a.imag() - s * b.real());
                amps[z | bit] = complex_t(c * b.real() + s * a.imag(), c * b.imag() - s * a.real());
            }
        }
    }
}

double energy(const StateVector &psi, const TfimHamiltonian &h) {
    check_sizes(psi, h);
    const auto amps = psi.amplitudes();
    const auto diag = h.diag_table();
    const std::size_t dim = amps.size();

    double diagonal = 0.0;
    for (std::size_t z = 0; z < dim; ++z) {
        diagonal += std::norm(amps[z]) * diag[z];
    }
    // Each unordered pair (z, z ^ bit) contributes conj(a) b + conj(b) a.
    double offdiag = 0.0;
    for (std::size_t q = 0; q < psi.n_qubits(); ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t z = base; z < base + bit; ++z) {
                const complex_t a = amps[z];
                const complex_t b = amps[z | bit];
                offdiag += a.real() * b.real() + a.imag() * b.imag();
            }
        }
    }
    return h.c1() * diagonal + h.c0() * 2.0 * offdiag;
}

complex_t expectation(const StateVector &psi, const TfimHamiltonian &h) {
    check_sizes(psi, h);
    const auto hpsi = matvec(h, psi.amplitudes());
    const auto amps = psi.amplitudes();
    complex_t acc = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        acc += std::conj(amps[z]) * hpsi[z];
    }
    return acc;
}

void apply_qaoa_layers(StateVector &psi, const TfimHamiltonian &h, std::span<const double> betas,
                       std::span<const double> gammas) {
    if (betas.size() != gammas.size()) {
        throw ConfigError("beta and gamma vectors differ in length");
    }
    for (std::size_t k = 0; k < betas.size(); ++k) {
        apply_phase(psi, gammas[k], h);
        apply_mixer(psi, betas[k]);
    }
}

StateVector run_circuit(const TfimHamiltonian &h, std::span<const double> betas,
                        std::span<const double> gammas) {
    StateVector psi = StateVector::minus_state(h.n_qubits());
    apply_qaoa_layers(psi, h, betas, gammas);
    return psi;
}

SnapshotRun run_snapshot_qaoa(const TfimHamiltonian &h, std::size_t p, double anneal_time) {
    const Schedule schedule = make_schedule(p, anneal_time, normalize(h).c1_hat);
    StateVector psi = run_circuit(h, schedule.betas, schedule.gammas);
    const double e = energy(psi, h);
    return {std::move(psi), e};
}

CircuitEvaluator::CircuitEvaluator(const TfimHamiltonian &h)
    : h_(&h), c1_hat_(normalize(h).c1_hat), scratch_(StateVector::minus_state(h.n_qubits())) {}

double CircuitEvaluator::energy(std::span<const double> betas, std::span<const double> gammas) {
    const double a = 1.0 / std::sqrt(static_cast<double>(scratch_.dim()));
    auto amps = scratch_.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] = (std::popcount(z) & 1U) ? -a : a;
    }
    apply_qaoa_layers(scratch_, *h_, betas, gammas);
    return sqaoa::energy(scratch_, *h_);
}

double CircuitEvaluator::snapshot_energy(std::size_t p, double anneal_time) {
    const Schedule s = make_schedule(p, anneal_time, c1_hat_);
    return energy(s.betas, s.gammas);
}

void write_amplitudes(const std::filesystem::path &path, const StateVector &psi) {
    static_assert(std::endian::native == std::endian::little,
                  "amplitude dumps assume a little-endian host");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    for (const auto &a : psi.amplitudes()) {
        const double pair[2] = {a.real(), a.imag()};
        out.write(reinterpret_cast<const char *>(pair), sizeof pair);
    }
    if (!out) {
        throw IoError("failed writing amplitudes to " + path.string());
    }
}

StateVector read_amplitudes(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<complex_t> amps;
    double pair[2];
    while (in.read(reinterpret_cast<char *>(pair), sizeof pair)) {
        amps.emplace_back(pair[0], pair[1]);
    }
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw IoError(path.string() + " does not hold 2^n amplitudes");
    }
    return {n, std::move(amps)};
}

} // namespace sqaoa
