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

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sqaoa {

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    /// nullopt when y has zero variance (correlation undefined).
    std::optional<double> pearson_r;
    std::vector<std::pair<double, double>> points;
    /// y_i - (slope x_i + intercept)
    std::vector<double> residuals;
};

/// Ordinary least squares y = slope x + intercept with Pearson's r.
/// Needs at least two points and non-constant x.
RegressionResult linear_regression(std::span<const std::pair<double, double>> points);

} // namespace sqaoa
