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
#include <functional>
#include <span>
#include <vector>

namespace sqaoa {

/// Writes the gradient at x into `grad` and returns the objective value.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct BfgsOptions {
    std::size_t max_iter = 500;
    double grad_tol = 1e-8;
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.9;
    std::size_t max_line_search = 50;
};

enum class BfgsStatus { converged, max_iterations, line_search_failed };

struct BfgsResult {
    std::vector<double> x;
    double value = 0.0;
    std::vector<double> grad;
    double grad_norm = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    BfgsStatus status = BfgsStatus::converged;
};

/**
 * Dense BFGS with a strong-Wolfe line search (bracketing + zoom with
 * safeguarded cubic interpolation). Returns the best point seen, so the
 * result never has a larger value than x0. Throws NumericError when the
 * objective or its gradient is not finite.
 */
BfgsResult minimize_bfgs(const Objective &objective, std::vector<double> x0,
                         const BfgsOptions &options = {});

} // namespace sqaoa
