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

#include "sqaoa/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "sqaoa/errors.hpp"

namespace sqaoa {

namespace {

void check_qubit_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n >= 63) {
        const double gib = std::ldexp(8.0, static_cast<int>(std::min<std::size_t>(n, 62))) /
                           (1024.0 * 1024.0 * 1024.0);
        std::ostringstream msg;
        msg << n << " qubits exceeds the cap of " << cap << "; the diagonal table alone needs "
            << gib << " GiB";
        throw ConfigError(msg.str());
    }
}

DiagLevels build_levels(std::span<const double> diag) {
    DiagLevels levels;
    std::unordered_map<double, std::uint16_t> lookup;
    levels.index.resize(diag.size());
    for (std::size_t z = 0; z < diag.size(); ++z) {
        auto it = lookup.find(diag[z]);
        if (it == lookup.end()) {
            if (levels.values.size() >= 65536) {
                return {};
            }
            it = lookup.emplace(diag[z], static_cast<std::uint16_t>(levels.values.size())).first;
            levels.values.push_back(diag[z]);
        }
        levels.index[z] = it->second;
    }
    return levels;
}

} // namespace

std::vector<double> diag_energies(const WeightedGraph &graph, std::size_t qubit_cap) {
    const std::size_t n = graph.n_vertices();
    check_qubit_cap(n, qubit_cap);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> table(dim, 0.0);
    const auto edges = graph.edges();
    for (std::size_t z = 0; z < dim; ++z) {
        double acc = 0.0;
        for (const auto &e : edges) {
            const bool anti = ((z >> e.u) ^ (z >> e.v)) & 1U;
            acc += anti ? -e.weight : e.weight;
        }
        table[z] = acc;
    }
    return table;
}

TfimHamiltonian::TfimHamiltonian(WeightedGraph graph, double c0, double c1,
                                 std::size_t qubit_cap)
    : graph_(std::move(graph)), c0_(c0), c1_(c1) {
    if (graph_.n_vertices() == 0) {
        throw ConfigError("Hamiltonian needs at least one qubit");
    }
    if (!std::isfinite(c0) || !std::isfinite(c1)) {
        throw ConfigError("Hamiltonian coefficients must be finite");
    }
    if (!(c0 + c1 > 0.0)) {
        throw ConfigError("c0 + c1 must be positive for the normalized Hamiltonian");
    }
    diag_ = diag_energies(graph_, qubit_cap);
    levels_ = build_levels(diag_);
}

NormalizedView normalize(double c0, double c1) {
    const double total = c0 + c1;
    if (!(total > 0.0)) {
        throw ConfigError("cannot normalize: c0 + c1 = " + std::to_string(total) +
                          " is not positive");
    }
    return {c0 / total, c1 / total};
}

template <typename Scalar>
void apply_h0(std::size_t n_qubits, std::span<const Scalar> in, std::span<Scalar> out) {
    const std::size_t dim = in.size();
    for (std::size_t z = 0; z < dim; ++z) {
        Scalar acc{};
        for (std::size_t j = 0; j < n_qubits; ++j) {
            acc += in[z ^ (std::size_t{1} << j)];
        }
        out[z] = acc;
    }
}

template <typename Scalar>
void apply_hamiltonian(const TfimHamiltonian &h, std::span<const Scalar> in,
                       std::span<Scalar> out) {
    const auto diag = h.diag_table();
    const std::size_t n = h.n_qubits();
    const double c0 = h.c0();
    const double c1 = h.c1();
    for (std::size_t z = 0; z < diag.size(); ++z) {
        Scalar flips{};
        for (std::size_t j = 0; j < n; ++j) {
            flips += in[z ^ (std::size_t{1} << j)];
        }
        out[z] = c1 * diag[z] * in[z] + c0 * flips;
    }
}

template void apply_h0<double>(std::size_t, std::span<const double>, std::span<double>);
template void apply_h0<complex_t>(std::size_t, std::span<const complex_t>, std::span<complex_t>);
template void apply_hamiltonian<double>(const TfimHamiltonian &, std::span<const double>,
                                        std::span<double>);
template void apply_hamiltonian<complex_t>(const TfimHamiltonian &, std::span<const complex_t>,
                                           std::span<complex_t>);

std::vector<complex_t> matvec(const TfimHamiltonian &h, std::span<const complex_t> v) {
    if (v.size() != h.dim()) {
        throw ConfigError("matvec: vector length " + std::to_string(v.size()) +
                          " does not match Hilbert space dimension " + std::to_string(h.dim()));
    }
    std::vector<complex_t> out(v.size());
    apply_hamiltonian<complex_t>(h, v, out);
    return out;
}

double snapshot_residual(const TfimHamiltonian &h, double anneal_time, std::size_t samples,
                         std::uint64_t seed, double tau_shift) {
    if (!(anneal_time > 0.0)) {
        throw ConfigError("snapshot_residual needs T > 0");
    }
    const NormalizedView view = normalize(h);
    const double tau = view.tau(anneal_time) + tau_shift;
    const double s = tau / anneal_time;

    const std::size_t dim = h.dim();
    const auto diag = h.diag_table();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<complex_t> v(dim);
    std::vector<complex_t> h0v(dim);

    double worst = 0.0;
    for (std::size_t sample = 0; sample < samples; ++sample) {
        double norm2 = 0.0;
        for (auto &x : v) {
            x = {gauss(rng), gauss(rng)};
            norm2 += std::norm(x);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto &x : v) {
            x *= inv;
        }
        apply_h0<complex_t>(h.n_qubits(), v, h0v);
        double diff2 = 0.0;
        for (std::size_t z = 0; z < dim; ++z) {
            const complex_t h1v = diag[z] * v[z];
            const complex_t normalized = view.c0_hat * h0v[z] + view.c1_hat * h1v;
            const complex_t anneal = (1.0 - s) * h0v[z] + s * h1v;
            diff2 += std::norm(normalized - anneal);
        }
        worst = std::max(worst, std::sqrt(diff2));
    }
    return worst;
}

} // namespace sqaoa
