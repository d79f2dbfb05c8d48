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

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the WeightedGraph container.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "sqaoa/graph.hpp"

namespace sqaoa::oracle {

using cplx = std::complex<double>;

/// Row-major dim x dim complex matrix.
struct Matrix {
    std::size_t dim = 0;
    std::vector<cplx> data;

    Matrix() = default;
    explicit Matrix(std::size_t d) : dim(d), data(d * d) {}
    cplx &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

Matrix identity(std::size_t dim);
Matrix kron(const Matrix &a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator+(const Matrix &a, const Matrix &b);
Matrix scaled(const Matrix &a, cplx s);
std::vector<cplx> mul_vec(const Matrix &m, std::span<const cplx> v);

/// Single-qubit operator `op` on qubit q of an n-qubit register, built as
/// I (x) ... (x) op (x) ... (x) I with qubit 0 as the rightmost factor.
Matrix embed(const Matrix &op, std::size_t q, std::size_t n);

Matrix pauli_x();
Matrix pauli_z();

/// sum_j X_j and sum w Z_u Z_v from Kronecker products.
Matrix dense_h0(std::size_t n);
Matrix dense_h1(const WeightedGraph &g);

/// exp(-i theta A) by scaling and squaring of a truncated Taylor series.
Matrix expm_minus_i(const Matrix &a, double theta);

/// |->^n as the Kronecker power of (|0> - |1>) / sqrt 2.
std::vector<cplx> minus_state(std::size_t n);

/// Dense QAOA: exp(-i b_k H0) exp(-i g_k H1) applied for k = 1..p.
std::vector<cplx> dense_qaoa(const WeightedGraph &g, std::span<const double> betas,
                             std::span<const double> gammas);

double dense_energy(const Matrix &h, std::span<const cplx> psi);

/// min over all 2^n spin configurations of sum w s_u s_v.
double brute_force_ising_min(const WeightedGraph &g);

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

/// Central finite differences of f at x with step h.
std::vector<double> central_difference(const std::function<double(std::span<const double>)> &f,
                                       std::span<const double> x, double h);

/// Erdos-Renyi style graph on n vertices with uniform weights in [lo, hi].
WeightedGraph random_weighted_graph(std::size_t n, double edge_prob, double lo, double hi,
                                    std::mt19937_64 &rng);

} // namespace sqaoa::oracle
