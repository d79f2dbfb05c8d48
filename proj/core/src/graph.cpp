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

#include "sqaoa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "sqaoa/errors.hpp"

namespace sqaoa {

namespace {

// Unbiased draw in [0, bound) from the standardized mt19937_64 stream, so the
// sampled graphs do not depend on the standard library's distributions.
std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % bound;
}

} // namespace

WeightedGraph::WeightedGraph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto &e : edges_) {
        if (e.u == e.v) {
            throw ConfigError("self-loop on vertex " + std::to_string(e.u));
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.v >= n_vertices_) {
            throw ConfigError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") out of range for " + std::to_string(n_vertices_) +
                              " vertices");
        }
        if (!seen.emplace(e.u, e.v).second) {
            throw ConfigError("duplicate edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ")");
        }
    }
}

std::vector<std::size_t> WeightedGraph::degrees() const {
    std::vector<std::size_t> deg(n_vertices_, 0);
    for (const auto &e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

WeightedGraph build_j1j2_torus(std::size_t rows, std::size_t cols, double j1, double j2) {
    if (rows < 3 || cols < 3) {
        throw ConfigError("J1-J2 torus needs rows >= 3 and cols >= 3 (got " +
                          std::to_string(rows) + "x" + std::to_string(cols) +
                          "); smaller tori wrap neighbours onto the same vertex and "
                          "produce parallel edges");
    }
    struct Offset {
        std::ptrdiff_t di, dj;
        bool nearest;
    };
    constexpr Offset offsets[] = {
        {-1, 0, true},  {1, 0, true},  {0, -1, true}, {0, 1, true},
        {-1, -1, false}, {-1, 1, false}, {1, -1, false}, {1, 1, false},
    };
    const auto r = static_cast<std::ptrdiff_t>(rows);
    const auto c = static_cast<std::ptrdiff_t>(cols);
    auto index = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
        return static_cast<std::size_t>(((i % r + r) % r) * c + ((j % c + c) % c));
    };

    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::ptrdiff_t i = 0; i < r; ++i) {
        for (std::ptrdiff_t j = 0; j < c; ++j) {
            const std::size_t a = index(i, j);
            for (const auto &off : offsets) {
                const std::size_t b = index(i + off.di, j + off.dj);
                const auto key = std::minmax(a, b);
                if (seen.emplace(key.first, key.second).second) {
                    edges.push_back({key.first, key.second, off.nearest ? -j1 : j2});
                }
            }
        }
    }
    return WeightedGraph(rows * cols, std::move(edges));
}

WeightedGraph build_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
    if (degree == 0 || degree >= n) {
        throw ConfigError("random regular graph needs 0 < degree < n (got n=" +
                          std::to_string(n) + ", degree=" + std::to_string(degree) + ")");
    }
    if ((n * degree) % 2 != 0) {
        throw ConfigError("random regular graph needs n*degree even (got n=" +
                          std::to_string(n) + ", degree=" + std::to_string(degree) + ")");
    }

    constexpr int max_attempts = 100000;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> points(n * degree);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            points[i] = i / degree;
        }
        for (std::size_t i = points.size() - 1; i > 0; --i) {
            std::swap(points[i], points[bounded_draw(rng, i + 1)]);
        }

        std::set<std::pair<std::size_t, std::size_t>> pairs;
        bool simple = true;
        for (std::size_t i = 0; i < points.size(); i += 2) {
            const auto [a, b] = std::minmax(points[i], points[i + 1]);
            if (a == b || !pairs.emplace(a, b).second) {
                simple = false;
                break;
            }
        }
        if (!simple) {
            continue;
        }
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (const auto &[a, b] : pairs) {
            edges.push_back({a, b, 1.0});
        }
        return WeightedGraph(n, std::move(edges));
    }
    throw NumericError("pairing model exceeded " + std::to_string(max_attempts) +
                       " attempts for n=" + std::to_string(n) + ", degree=" +
                       std::to_string(degree) + ", seed=" + std::to_string(seed));
}

void write_edge_list(std::ostream &out, const WeightedGraph &graph) {
    out << graph.n_vertices() << '\n';
    out << std::setprecision(17);
    for (const auto &e : graph.edges()) {
        out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    }
}

WeightedGraph read_edge_list(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> n)) {
                throw ConfigError("edge list line " + std::to_string(line_no) +
                                  ": expected vertex count");
            }
            have_header = true;
            continue;
        }
        Edge e{};
        if (!(fields >> e.u >> e.v >> e.weight)) {
            throw ConfigError("edge list line " + std::to_string(line_no) +
                              ": expected `u v w`");
        }
        edges.push_back(e);
    }
    if (!have_header) {
        throw ConfigError("edge list is empty");
    }
    return WeightedGraph(n, std::move(edges));
}

void save_edge_list(const std::filesystem::path &path, const WeightedGraph &graph) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_edge_list(out, graph);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

WeightedGraph load_edge_list(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open edge list " + path.string());
    }
    return read_edge_list(in);
}

} // namespace sqaoa
