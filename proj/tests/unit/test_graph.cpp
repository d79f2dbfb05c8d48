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

#include <filesystem>
#include <set>
#include <sstream>

#include "sqaoa/errors.hpp"
#include "sqaoa/graph.hpp"

namespace sqaoa {
namespace {

TEST(WeightedGraph, CanonicalizesEndpoints) {
    const WeightedGraph g(3, {{2, 0, 1.5}});
    ASSERT_EQ(g.n_edges(), 1u);
    EXPECT_EQ(g.edges()[0].u, 0u);
    EXPECT_EQ(g.edges()[0].v, 2u);
    EXPECT_DOUBLE_EQ(g.edges()[0].weight, 1.5);
}

TEST(WeightedGraph, RejectsMalformedEdges) {
    EXPECT_THROW(WeightedGraph(3, {{1, 1, 1.0}}), ConfigError);
    EXPECT_THROW(WeightedGraph(3, {{0, 3, 1.0}}), ConfigError);
    EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), ConfigError);
}

TEST(Torus, ThreeByThreeHasNineVerticesAndThirtySixEdges) {
    const auto g = build_j1j2_torus(3, 3, 1.0, 0.5);
    EXPECT_EQ(g.n_vertices(), 9u);
    EXPECT_EQ(g.n_edges(), 36u);
    for (std::size_t d : g.degrees()) {
        EXPECT_EQ(d, 8u);
    }
}

TEST(Torus, WeightsSplitIntoNearestAndDiagonalNeighbours) {
    const auto g = build_j1j2_torus(4, 4, 1.0, 0.3);
    std::size_t nn = 0;
    std::size_t nnn = 0;
    for (const auto &e : g.edges()) {
        if (e.weight == -1.0) {
            ++nn;
        } else if (e.weight == 0.3) {
            ++nnn;
        } else {
            ADD_FAILURE() << "unexpected weight " << e.weight;
        }
    }
    EXPECT_EQ(nn, 32u);
    EXPECT_EQ(nnn, 32u);
}

TEST(Torus, ZeroJ2KeepsDiagonalEdgesWithZeroWeight) {
    const auto g = build_j1j2_torus(3, 3, 1.0, 0.0);
    EXPECT_EQ(g.n_edges(), 36u);
}

TEST(Torus, RejectsSmallDimensions) {
    EXPECT_THROW(build_j1j2_torus(2, 3, 1.0, 0.0), ConfigError);
    EXPECT_THROW(build_j1j2_torus(3, 1, 1.0, 0.0), ConfigError);
}

TEST(RandomRegular, EveryVertexHasRequestedDegree) {
    for (std::uint64_t seed : {1u, 7u, 99u}) {
        const auto g = build_random_regular(12, 3, seed);
        EXPECT_EQ(g.n_edges(), 18u);
        for (std::size_t d : g.degrees()) {
            EXPECT_EQ(d, 3u);
        }
    }
}

TEST(RandomRegular, DeterministicPerSeed) {
    EXPECT_EQ(build_random_regular(10, 3, 5), build_random_regular(10, 3, 5));
    EXPECT_NE(build_random_regular(10, 3, 5), build_random_regular(10, 3, 6));
}

TEST(RandomRegular, RejectsOddDegreeSum) {
    EXPECT_THROW(build_random_regular(5, 3, 1), ConfigError);
    EXPECT_THROW(build_random_regular(4, 4, 1), ConfigError);
}

TEST(EdgeList, RoundTripsExactly) {
    const WeightedGraph g(4, {{0, 1, 0.1}, {1, 2, -1.0 / 3.0}, {2, 3, 1e-17}});
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, RejectsGarbage) {
    std::stringstream missing("3\n0 1\n");
    EXPECT_THROW(read_edge_list(missing), ConfigError);
    std::stringstream bad_count("abc\n");
    EXPECT_THROW(read_edge_list(bad_count), ConfigError);
}

TEST(EdgeList, MissingFileReportsPath) {
    try {
        load_edge_list("/nonexistent/graph.txt");
        FAIL() << "expected IoError";
    } catch (const IoError &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/graph.txt"), std::string::npos);
    }
}

TEST(EdgeList, SaveThenLoad) {
    const auto path = std::filesystem::temp_directory_path() / "sqaoa_edge_list_test.txt";
    const auto g = build_j1j2_torus(3, 3, 1.0, 0.25);
    save_edge_list(path, g);
    EXPECT_EQ(load_edge_list(path), g);
    std::filesystem::remove(path);
}

} // namespace
} // namespace sqaoa
