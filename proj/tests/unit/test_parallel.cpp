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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "sqaoa/parallel.hpp"

namespace sqaoa {
namespace {

TEST(ParallelFor, CoversEveryIndexOnce) {
    for (std::size_t workers : {1u, 3u, 8u, 64u}) {
        std::vector<std::atomic<int>> hits(37);
        parallel_for(hits.size(), workers, [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                hits[i]++;
            }
        });
        for (const auto &h : hits) {
            EXPECT_EQ(h.load(), 1);
        }
    }
}

TEST(ParallelFor, EmptyRangeRunsNothing) {
    bool called = false;
    parallel_for(0, 4, [&](std::size_t, std::size_t) { called = true; });
    EXPECT_FALSE(called);
}

TEST(ParallelFor, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(10, 4,
                              [](std::size_t b, std::size_t) {
                                  if (b == 0) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}

TEST(DefaultWorkers, ReadsEnvironment) {
    ::setenv(kWorkersEnv, "3", 1);
    EXPECT_EQ(default_workers(), 3u);
    ::setenv(kWorkersEnv, "garbage", 1);
    EXPECT_GE(default_workers(), 1u);
    ::setenv(kWorkersEnv, "0", 1);
    EXPECT_GE(default_workers(), 1u);
    ::unsetenv(kWorkersEnv);
    EXPECT_GE(default_workers(), 1u);
}

} // namespace
} // namespace sqaoa
