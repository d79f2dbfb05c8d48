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

#include <gtest/gtest.h>

#include <cmath>

#include "sqaoa/errors.hpp"
#include "sqaoa/regression.hpp"

namespace sqaoa {
namespace {

TEST(LinearRegression, ExactLine) {
    std::vector<std::pair<double, double>> pts;
    for (int p = 1; p <= 20; ++p) {
        pts.emplace_back(p, 0.75 * p);
    }
    const auto r = linear_regression(pts);
    EXPECT_NEAR(r.slope, 0.75, 1e-14);
    EXPECT_NEAR(r.intercept, 0.0, 1e-13);
    ASSERT_TRUE(r.pearson_r.has_value());
    EXPECT_NEAR(*r.pearson_r, 1.0, 1e-14);
    for (double res : r.residuals) {
        EXPECT_NEAR(res, 0.0, 1e-13);
    }
}

TEST(LinearRegression, ConstantResponseHasUndefinedCorrelation) {
    std::vector<std::pair<double, double>> pts;
    for (int p = 1; p <= 10; ++p) {
        pts.emplace_back(p, 3.0);
    }
    const auto r = linear_regression(pts);
    EXPECT_EQ(r.slope, 0.0);
    EXPECT_DOUBLE_EQ(r.intercept, 3.0);
    EXPECT_FALSE(r.pearson_r.has_value());
}

TEST(LinearRegression, StepwiseDataIsImperfect) {
    // Long plateaus with occasional jumps.
    std::vector<std::pair<double, double>> pts;
    for (int p = 1; p <= 30; ++p) {
        pts.emplace_back(p, p < 12 ? 5.0 : (p < 25 ? 14.0 : 27.0));
    }
    const auto r = linear_regression(pts);
    ASSERT_TRUE(r.pearson_r.has_value());
    EXPECT_LT(std::abs(*r.pearson_r), 1.0);
    EXPECT_GT(*r.pearson_r, 0.8);
    ASSERT_EQ(r.residuals.size(), pts.size());
    double sum = 0.0;
    for (double res : r.residuals) {
        sum += res;
    }
    EXPECT_NEAR(sum, 0.0, 1e-10);
}

TEST(LinearRegression, CorrelationStaysInRange) {
    const std::vector<std::pair<double, double>> pts = {{1, 3}, {2, -1}, {3, 4}, {4, -2}, {5, 0}};
    const auto r = linear_regression(pts);
    ASSERT_TRUE(r.pearson_r.has_value());
    EXPECT_GE(*r.pearson_r, -1.0);
    EXPECT_LE(*r.pearson_r, 1.0);
}

TEST(LinearRegression, RejectsDegenerateInput) {
    EXPECT_THROW(linear_regression(std::vector<std::pair<double, double>>{{1, 2}}), ConfigError);
    EXPECT_THROW(linear_regression(std::vector<std::pair<double, double>>{{1, 2}, {1, 3}}),
                 ConfigError);
}

} // namespace
} // namespace sqaoa
