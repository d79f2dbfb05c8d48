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

#include "sqaoa/regression.hpp"

#include <algorithm>
#include <cmath>

#include "sqaoa/errors.hpp"

namespace sqaoa {

RegressionResult linear_regression(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw ConfigError("linear regression needs at least two points");
    }
    const auto n = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto &[x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (const auto &[x, y] : points) {
        sxx += (x - mean_x) * (x - mean_x);
        syy += (y - mean_y) * (y - mean_y);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0.0) {
        throw ConfigError("linear regression needs non-constant x values");
    }

    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = mean_y - r.slope * mean_x;
    if (syy > 0.0) {
        r.pearson_r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    }
    r.points.assign(points.begin(), points.end());
    r.residuals.reserve(points.size());
    for (const auto &[x, y] : points) {
        r.residuals.push_back(y - (r.slope * x + r.intercept));
    }
    return r;
}

} // namespace sqaoa
