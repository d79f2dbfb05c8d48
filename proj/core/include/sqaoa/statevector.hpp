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
#include <filesystem>
#include <span>
#include <vector>

#include "sqaoa/hamiltonian.hpp"

namespace sqaoa {

/// 2^n complex amplitudes; basis index bit j is qubit j.
class StateVector {
  public:
    explicit StateVector(std::size_t n_qubits, std::size_t qubit_cap = kDefaultQubitCap);
    StateVector(std::size_t n_qubits, std::vector<complex_t> amplitudes);

    /// |->^n, the ground state of sum_j X_j: amplitude (-1)^popcount(z) / sqrt(2^n).
    static StateVector minus_state(std::size_t n_qubits, std::size_t qubit_cap = kDefaultQubitCap);
    /// Computational basis state |z>.
    static StateVector basis_state(std::size_t n_qubits, std::size_t z);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<complex_t> amplitudes() noexcept { return amps_; }
    [[nodiscard]] double norm() const;

  private:
    std::size_t n_qubits_;
    std::vector<complex_t> amps_;
};

inline StateVector init_minus(std::size_t n_qubits, std::size_t qubit_cap = kDefaultQubitCap) {
    return StateVector::minus_state(n_qubits, qubit_cap);
}

/// amplitude[z] *= exp(-i gamma diag[z]). The bare H1 table, no c1 factor.
void apply_phase(StateVector &psi, double gamma, std::span<const double> diag);
/// Same as above, using the Hamiltonian's level table when available.
void apply_phase(StateVector &psi, double gamma, const TfimHamiltonian &h);

/// exp(-i beta sum_j X_j): the rotation [[cos, -i sin], [-i sin, cos]] on
/// every qubit.
void apply_mixer(StateVector &psi, double beta);

/// <psi|H|psi> for the unnormalized H = c0 H0 + c1 H1.
double energy(const StateVector &psi, const TfimHamiltonian &h);

/// Full complex quadratic form <psi, H psi> via matvec; its imaginary part is
/// a Hermiticity diagnostic.
complex_t expectation(const StateVector &psi, const TfimHamiltonian &h);

/// Applies layers k = 1..p: phase(gamma_k) then mixer(beta_k).
void apply_qaoa_layers(StateVector &psi, const TfimHamiltonian &h, std::span<const double> betas,
                       std::span<const double> gammas);

/// |->^n followed by the given QAOA layers.
StateVector run_circuit(const TfimHamiltonian &h, std::span<const double> betas,
                        std::span<const double> gammas);

struct SnapshotRun {
    StateVector state;
    double energy;
};

/// Snapshot-QAOA state and energy at depth p and anneal time T >= 0.
SnapshotRun run_snapshot_qaoa(const TfimHamiltonian &h, std::size_t p, double anneal_time);

/**
 * Reusable evaluator for E_p(T) and E(beta, gamma). Holds one scratch state,
 * so an instance must not be shared between threads; create one per worker.
 */
class CircuitEvaluator {
  public:
    explicit CircuitEvaluator(const TfimHamiltonian &h);

    [[nodiscard]] double energy(std::span<const double> betas, std::span<const double> gammas);
    [[nodiscard]] double snapshot_energy(std::size_t p, double anneal_time);
    [[nodiscard]] double c1_hat() const noexcept { return c1_hat_; }
    [[nodiscard]] const TfimHamiltonian &hamiltonian() const noexcept { return *h_; }

  private:
    const TfimHamiltonian *h_;
    double c1_hat_;
    StateVector scratch_;
    std::vector<double> betas_;
    std::vector<double> gammas_;
};

/// Interleaved (re, im) float64 little-endian values in index order.
void write_amplitudes(const std::filesystem::path &path, const StateVector &psi);
StateVector read_amplitudes(const std::filesystem::path &path);

} // namespace sqaoa
