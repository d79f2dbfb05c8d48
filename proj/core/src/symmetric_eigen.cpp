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

#include "sqaoa/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sqaoa/errors.hpp"

namespace sqaoa::linalg {

Tridiagonal householder_tridiagonalize(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) {
        throw ConfigError("householder_tridiagonalize: matrix is not n x n");
    }
    auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };

    Tridiagonal t;
    t.diag.resize(n);
    t.offdiag.resize(n > 0 ? n - 1 : 0);
    std::vector<double> v(n), p(n), w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Reflect column k below the diagonal onto alpha * e_{k+1}.
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            norm2 += at(i, k) * at(i, k);
        }
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) {
            continue;
        }
        const double x0 = at(k + 1, k);
        const double alpha = x0 > 0.0 ? -norm : norm;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = at(i, k);
        }
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) {
            continue;
        }
        const double inv = 1.0 / std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] *= inv;
        }

        // A' = A - v w^T - w v^T with w = 2 (A v - (v^T A v) v), on the
        // trailing block.
        for (std::size_t i = k + 1; i < n; ++i) {
            double acc = 0.0;
            const double *row = &a[i * n];
            for (std::size_t j = k + 1; j < n; ++j) {
                acc += row[j] * v[j];
            }
            p[i] = acc;
        }
        double vap = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            vap += v[i] * p[i];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            w[i] = 2.0 * (p[i] - vap * v[i]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double *row = &a[i * n];
            for (std::size_t j = k + 1; j < n; ++j) {
                row[j] -= v[i] * w[j] + w[i] * v[j];
            }
        }
        at(k + 1, k) = alpha;
        at(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            at(i, k) = 0.0;
            at(k, i) = 0.0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        t.diag[i] = at(i, i);
        if (i + 1 < n) {
            t.offdiag[i] = at(i + 1, i);
        }
    }
    return t;
}

namespace {

// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
std::size_t count_below(const Tridiagonal &t, double x) {
    const std::size_t n = t.diag.size();
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e2 = i == 0 ? 0.0 : t.offdiag[i - 1] * t.offdiag[i - 1];
        q = t.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) {
            q = -std::numeric_limits<double>::epsilon() *
                (std::abs(t.diag[i]) + std::abs(x) + std::numeric_limits<double>::min());
        }
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

} // namespace

std::vector<double> tridiagonal_eigenvalues_bisection(const Tridiagonal &t) {
    const std::size_t n = t.diag.size();
    if (n == 0) {
        return {};
    }
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) +
                              (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    lo -= 1e-12 * scale;
    hi += 1e-12 * scale;

    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k-th eigenvalue: smallest x with count_below(x) > k.
        double a = lo;
        double b = hi;
        while (b - a > 4.0 * std::numeric_limits<double>::epsilon() * scale) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) {
                break;
            }
            if (count_below(t, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        values[k] = 0.5 * (a + b);
    }
    return values;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    return tridiagonal_eigenvalues_bisection(householder_tridiagonalize(std::move(a), n));
}

EigenDecomposition tridiagonal_eigen_ql(const Tridiagonal &t) {
    const std::size_t n = t.diag.size();
    std::vector<double> d = t.diag;
    std::vector<double> e(n, 0.0);
    std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        z[i * n + i] = 1.0;
    }

    const auto ni = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t l = 0; l < ni; ++l) {
        int iter = 0;
        std::ptrdiff_t m = 0;
        do {
            for (m = l; m < ni - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++iter > 60) {
                throw NumericError("tridiagonal QL did not converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            std::ptrdiff_t i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    const double zf = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * zf;
                    z[k * n + i] = c * z[k * n + i] - s * zf;
                }
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (true);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = d[order[col]];
        for (std::size_t row = 0; row < n; ++row) {
            out.vectors[row * n + col] = z[row * n + order[col]];
        }
    }
    return out;
}

} // namespace sqaoa::linalg
