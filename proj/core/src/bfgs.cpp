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

#include "sqaoa/bfgs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sqaoa/errors.hpp"

namespace sqaoa {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct Sample {
    double alpha = 0.0;
    double value = 0.0;
    double slope = 0.0; // directional derivative along d
};

// Minimizer of the cubic through (a, fa, da), (b, fb, db), kept well inside
// [min(a,b), max(a,b)].
double safeguarded_cubic(const Sample &a, const Sample &b) {
    const double lo = std::min(a.alpha, b.alpha);
    const double hi = std::max(a.alpha, b.alpha);
    const double margin = 0.1 * (hi - lo);
    const double d1 = a.slope + b.slope - 3.0 * (a.value - b.value) / (a.alpha - b.alpha);
    const double disc = d1 * d1 - a.slope * b.slope;
    double trial = 0.5 * (lo + hi);
    if (disc >= 0.0) {
        const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
        const double denom = b.slope - a.slope + 2.0 * d2;
        if (denom != 0.0) {
            trial = b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / denom;
        }
    }
    if (!std::isfinite(trial) || trial < lo + margin || trial > hi - margin) {
        trial = 0.5 * (lo + hi);
    }
    return trial;
}

class LineSearch {
  public:
    LineSearch(const Objective &f, const BfgsOptions &opt, std::span<const double> x,
               std::span<const double> d, double f0, double g0d)
        : trial_x_(x.size()), trial_g_(x.size()), f_(f), opt_(opt), x_(x), d_(d), f0_(f0),
          g0d_(g0d) {}

    // Strong Wolfe search; on success the accepted point is left in
    // trial_x / trial_g / value.
    bool run(double alpha_init) {
        Sample prev{0.0, f0_, g0d_};
        double alpha = alpha_init;
        for (std::size_t i = 0; i < opt_.max_line_search; ++i) {
            const Sample cur = evaluate(alpha);
            if (cur.value > f0_ + opt_.wolfe_c1 * alpha * g0d_ || (i > 0 && cur.value >= prev.value)) {
                return zoom(prev, cur);
            }
            if (std::abs(cur.slope) <= -opt_.wolfe_c2 * g0d_) {
                return true;
            }
            if (cur.slope >= 0.0) {
                return zoom(cur, prev);
            }
            prev = cur;
            alpha *= 2.0;
        }
        return false;
    }

    std::vector<double> trial_x_;
    std::vector<double> trial_g_;
    double value_ = 0.0;
    std::size_t evaluations_ = 0;

  private:
    Sample evaluate(double alpha) {
        for (std::size_t i = 0; i < x_.size(); ++i) {
            trial_x_[i] = x_[i] + alpha * d_[i];
        }
        value_ = f_(trial_x_, trial_g_);
        ++evaluations_;
        if (!std::isfinite(value_)) {
            std::ostringstream msg;
            msg << "objective is not finite at step length " << alpha;
            throw NumericError(msg.str());
        }
        const double slope = dot(trial_g_, d_);
        if (!std::isfinite(slope)) {
            throw NumericError("gradient is not finite during line search");
        }
        return {alpha, value_, slope};
    }

    bool zoom(Sample lo, Sample hi) {
        for (std::size_t i = 0; i < opt_.max_line_search; ++i) {
            if (std::abs(hi.alpha - lo.alpha) <= 1e-16 * std::max(1.0, std::abs(lo.alpha))) {
                break;
            }
            const double alpha = safeguarded_cubic(lo, hi);
            const Sample cur = evaluate(alpha);
            if (cur.value > f0_ + opt_.wolfe_c1 * alpha * g0d_ || cur.value >= lo.value) {
                hi = cur;
            } else {
                if (std::abs(cur.slope) <= -opt_.wolfe_c2 * g0d_) {
                    return true;
                }
                if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) {
                    hi = lo;
                }
                lo = cur;
            }
        }
        // Accept the best sufficient-decrease point if the curvature
        // condition could not be met.
        if (lo.alpha > 0.0 && lo.value <= f0_ + opt_.wolfe_c1 * lo.alpha * g0d_) {
            evaluate(lo.alpha);
            return true;
        }
        return false;
    }

    const Objective &f_;
    const BfgsOptions &opt_;
    std::span<const double> x_;
    std::span<const double> d_;
    double f0_;
    double g0d_;
};

} // namespace

BfgsResult minimize_bfgs(const Objective &objective, std::vector<double> x0,
                         const BfgsOptions &options) {
    const std::size_t n = x0.size();
    BfgsResult result;
    result.x = std::move(x0);
    result.grad.assign(n, 0.0);
    result.value = objective(result.x, result.grad);
    result.evaluations = 1;
    if (!std::isfinite(result.value)) {
        throw NumericError("objective is not finite at the starting point");
    }
    for (double g : result.grad) {
        if (!std::isfinite(g)) {
            throw NumericError("gradient is not finite at the starting point");
        }
    }
    result.grad_norm = norm2(result.grad);
    if (n == 0 || result.grad_norm <= options.grad_tol) {
        result.status = BfgsStatus::converged;
        return result;
    }

    std::vector<double> x = result.x;
    std::vector<double> g = result.grad;
    double fx = result.value;

    std::vector<double> hinv(n * n, 0.0);
    auto reset_identity = [&](double scale) {
        std::fill(hinv.begin(), hinv.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            hinv[i * n + i] = scale;
        }
    };
    reset_identity(1.0);
    bool fresh = true;

    std::vector<double> d(n), s(n), y(n), hy(n);
    result.status = BfgsStatus::max_iterations;

    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += hinv[i * n + j] * g[j];
            }
            d[i] = -acc;
        }
        double gd = dot(g, d);
        if (!(gd < 0.0)) {
            reset_identity(1.0);
            fresh = true;
            for (std::size_t i = 0; i < n; ++i) {
                d[i] = -g[i];
            }
            gd = dot(g, d);
        }

        const double alpha0 = fresh ? std::min(1.0, 1.0 / norm2(g)) : 1.0;
        LineSearch search(objective, options, x, d, fx, gd);
        const bool ok = search.run(alpha0);
        result.evaluations += search.evaluations_;
        if (!ok) {
            if (!fresh) {
                reset_identity(1.0);
                fresh = true;
                continue;
            }
            result.status = BfgsStatus::line_search_failed;
            result.iterations = iter;
            break;
        }

        for (std::size_t i = 0; i < n; ++i) {
            s[i] = search.trial_x_[i] - x[i];
            y[i] = search.trial_g_[i] - g[i];
        }
        x = search.trial_x_;
        g = search.trial_g_;
        fx = search.value_;
        result.iterations = iter + 1;

        if (fx < result.value) {
            result.value = fx;
            result.x = x;
            result.grad = g;
            result.grad_norm = norm2(g);
        }
        if (norm2(g) <= options.grad_tol) {
            if (fx <= result.value) {
                result.value = fx;
                result.x = x;
                result.grad = g;
                result.grad_norm = norm2(g);
            }
            result.status = BfgsStatus::converged;
            break;
        }

        const double ys = dot(y, s);
        if (ys <= 1e-14 * norm2(y) * norm2(s)) {
            continue;
        }
        if (fresh) {
            reset_identity(ys / dot(y, y));
            fresh = false;
        }
        const double rho = 1.0 / ys;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += hinv[i * n + j] * y[j];
            }
            hy[i] = acc;
        }
        const double yhy = dot(y, hy);
        const double coeff = rho * rho * yhy + rho;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                hinv[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + coeff * s[i] * s[j];
            }
        }
    }
    return result;
}

} // namespace sqaoa
