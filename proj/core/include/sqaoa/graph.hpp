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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace sqaoa {

struct Edge {
    std::size_t u;
    std::size_t v;
    double weight;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Undirected weighted graph defining the diagonal coupling Hamiltonian
 * H1 = sum_(u,v) w_uv Z_u Z_v.
 *
 * Every stored edge satisfies u < v < n_vertices, and no (u, v) pair appears
 * twice. The edge order is part of the value: identical inputs always give
 * the same order.
 */
class WeightedGraph {
  public:
    WeightedGraph() = default;

    /// Validates and canonicalizes (swaps u > v). Throws ConfigError on
    /// self-loops, out-of-range vertices or duplicate pairs.
    WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges);

    [[nodiscard]] std::size_t n_vertices() const noexcept { return n_vertices_; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t n_edges() const noexcept { return edges_.size(); }

    /// Number of edges incident to each vertex.
    [[nodiscard]] std::vector<std::size_t> degrees() const;

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

  private:
    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
};

/**
 * J1-J2 square lattice on a rows x cols torus. Vertex (i, j) is index
 * i * cols + j. Nearest neighbours carry weight -J1 and diagonal
 * next-nearest neighbours carry +J2, so that sum w ZZ equals
 * -J1 sum_NN ZZ + J2 sum_NNN ZZ. Requires rows, cols >= 3; smaller tori would
 * create parallel edges.
 */
WeightedGraph build_j1j2_torus(std::size_t rows, std::size_t cols, double j1, double j2);

/**
 * Uniformly sampled simple `degree`-regular graph on n vertices using the
 * pairing (configuration) model with rejection of loops and multi-edges.
 * All weights are +1. Deterministic for a fixed seed.
 */
WeightedGraph build_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Edge-list text format: `n_vertices` on the first line, then `u v w` per
/// edge with 17 significant digits.
void write_edge_list(std::ostream &out, const WeightedGraph &graph);
WeightedGraph read_edge_list(std::istream &in);

void save_edge_list(const std::filesystem::path &path, const WeightedGraph &graph);
WeightedGraph load_edge_list(const std::filesystem::path &path);

} // namespace sqaoa
