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
#include <span>
#include <vector>

// Small dense / tridiagonal symmetric eigenvalue kernels. Matrices are
// row-major, n x n.
namespace sqaoa::linalg {

struct Tridiagonal {
    std::vector<double> diag;    ///< n entries
    std::vector<double> offdiag; ///< n - 1 entries, offdiag[i] couples i and i + 1
};

/// Householder reduction of a dense symmetric matrix to tridiagonal form
/// (eigenvalues only, no accumulated transform). `a` is consumed.
Tridiagonal householder_tridiagonalize(std::vector<double> a, std::size_t n);

/// All eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
/// bisection, ascending.
std::vector<double> tridiagonal_eigenvalues_bisection(const Tridiagonal &t);

/// Ascending eigenvalues of a dense symmetric matrix (Householder + bisection).
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

struct EigenDecomposition {
    std::vector<double> values;  ///< ascending
    std::vector<double> vectors; ///< row-major n x n, column k pairs with values[k]
};

/// Implicit-shift QL iteration on a tridiagonal matrix, with eigenvectors.
/// Throws NumericError if an eigenvalue fails to converge in 60 sweeps.
EigenDecomposition tridiagonal_eigen_ql(const Tridiagonal &t);

} // namespace sqaoa::linalg
