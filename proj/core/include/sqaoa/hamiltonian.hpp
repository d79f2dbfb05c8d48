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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sqaoa/graph.hpp"

namespace sqaoa {

using complex_t = std::complex<double>;

/// Largest register the diagonal table and state vectors are allowed to span.
inline constexpr std::size_t kDefaultQubitCap = 26;

/**
 * Diagonal of H1 = sum w_uv Z_u Z_v over the computational basis.
 *
 * Qubit j is bit j of the basis index (qubit 0 is the least significant bit)
 * and Z|0> = +|0>, so entry z is sum w_uv s_u(z) s_v(z) with s_u = +1 when
 * bit u of z is clear and -1 when it is set.
 */
std::vector<double> diag_energies(const WeightedGraph &graph,
                                  std::size_t qubit_cap = kDefaultQubitCap);

/// Distinct diagonal values plus a per-basis-state index into them. Lets the
/// phase layer evaluate one complex exponential per level instead of per
/// amplitude.
struct DiagLevels {
    std::vector<double> values;
    std::vector<std::uint16_t> index;
};

/**
 * H = c0 H0 + c1 H1 with H0 = sum_j X_j and H1 = sum_(u,v) w_uv Z_u Z_v.
 *
 * Immutable once built; the diagonal table of H1 is precomputed at
 * construction.
 */
class TfimHamiltonian {
  public:
    TfimHamiltonian(WeightedGraph graph, double c0, double c1,
                    std::size_t qubit_cap = kDefaultQubitCap);

    /// Transverse-field Ising mapping: c0 = Bx, c1 = 1.
    static TfimHamiltonian tfim(WeightedGraph graph, double bx,
                                std::size_t qubit_cap = kDefaultQubitCap) {
        return {std::move(graph), bx, 1.0, qubit_cap};
    }

    [[nodiscard]] const WeightedGraph &graph() const noexcept { return graph_; }
    [[nodiscard]] double c0() const noexcept { return c0_; }
    [[nodiscard]] double c1() const noexcept { return c1_; }
    [[nodiscard]] std::size_t n_qubits() const noexcept { return graph_.n_vertices(); }
    [[nodiscard]] std::size_t dim() const noexcept { return diag_.size(); }
    [[nodiscard]] std::span<const double> diag_table() const noexcept { return diag_; }

    /// Empty `values` when the table has more than 65536 distinct entries.
    [[nodiscard]] const DiagLevels &diag_levels() const noexcept { return levels_; }

  private:
    WeightedGraph graph_;
    double c0_;
    double c1_;
    std::vector<double> diag_;
    DiagLevels levels_;
};

struct NormalizedView {
    double c0_hat;
    double c1_hat;

    /// Partial anneal time tau = c1_hat * T.
    [[nodiscard]] double tau(double anneal_time) const noexcept { return c1_hat * anneal_time; }
};

/// Rescales (c0, c1) to sum to one. Throws ConfigError when c0 + c1 <= 0.
NormalizedView normalize(double c0, double c1);
inline NormalizedView normalize(const TfimHamiltonian &h) { return normalize(h.c0(), h.c1()); }

/// out = H0 in (sum of single-qubit X flips).
template <typename Scalar>
void apply_h0(std::size_t n_qubits, std::span<const Scalar> in, std::span<Scalar> out);

/// out = c0 H0 in + c1 H1 in. `in` and `out` must not alias.
template <typename Scalar>
void apply_hamiltonian(const TfimHamiltonian &h, std::span<const Scalar> in,
                       std::span<Scalar> out);

/// Matrix-free H v. Throws ConfigError on a length mismatch.
std::vector<complex_t> matvec(const TfimHamiltonian &h, std::span<const complex_t> v);

/**
 * Largest ||H_hat v - H_T(tau) v|| over `samples` random unit vectors, where
 * H_hat = c0_hat H0 + c1_hat H1 and H_T(t) = (1 - t/T) H0 + (t/T) H1 is the
 * linear anneal Hamiltonian evaluated at tau = c1_hat T (+ tau_shift).
 * Rounding-level for tau_shift = 0.
 */
double snapshot_residual(const TfimHamiltonian &h, double anneal_time, std::size_t samples,
                         std::uint64_t seed, double tau_shift = 0.0);

} // namespace sqaoa
