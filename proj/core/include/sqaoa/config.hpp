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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqaoa/rational.hpp"

namespace sqaoa {

/// The CLI subcommands a RunConfig can be resolved for.
const std::vector<std::string> &known_subcommands();

/**
 * Either the J1-J2 torus {rows, cols, J1, J2, Bx} or a generic graph
 * {edge_list_path, c0, c1}. Couplings are kept as exact fractions so the
 * period can be derived from them.
 */
struct HamiltonianSpec {
    enum class Kind { Torus, EdgeList };

    Kind kind = Kind::Torus;
    std::size_t rows = 3;
    std::size_t cols = 3;
    Fraction j1{1};
    Fraction j2{0};
    Fraction bx{1};
    std::string edge_list_path;
    Fraction c0{1};
    Fraction c1{1};

    friend bool operator==(const HamiltonianSpec &, const HamiltonianSpec &) = default;
};

/**
 * Fully resolved run configuration. Every field carries its default after
 * parsing, so the canonical JSON form (and therefore the hash) covers the
 * values actually used.
 *
 * Defaults: p = 1 (5 for tqa-maxcut), t = 1, t_lo = 0, t_hi = p, dt = 0.01,
 * epsilon = 0.01, p_cap = 250 (20 when refine is set), p_max = 20,
 * samples = 1000, Lanczos tol = 1e-10 / max_iter = 500, BFGS
 * max_iter = 500 / grad_tol = 1e-8, heatmap grids J2 = 0:0.05:1 and
 * Bx = 0.1:0.05:2, n = 12, degree = 3, t_max = 5, t_samples = 501.
 */
struct RunConfig {
    std::string subcommand;
    HamiltonianSpec hamiltonian;

    std::size_t p = 1;
    double t = 1.0;
    double t_lo = 0.0;
    double t_hi = 1.0;
    double dt = 0.01;
    bool full_period = false;

    double epsilon = 0.01;
    std::size_t p_cap = 250;
    std::size_t p_max = 20;
    std::size_t p_start = 1;
    bool refine = false;
    std::size_t samples = 1000;

    double tol = 1e-10;
    std::size_t max_iter = 500;
    std::size_t bfgs_max_iter = 500;
    double grad_tol = 1e-8;

    std::vector<double> j2_grid;
    std::vector<double> bx_grid;

    /// Coefficients of pi; derived from the Hamiltonian when absent.
    std::optional<Fraction> rho0;
    std::optional<Fraction> rho1;

    std::size_t n = 12;
    std::size_t degree = 3;
    double t_max = 5.0;
    std::size_t t_samples = 501;

    std::uint64_t seed = 0x5eed;
    std::uint64_t graph_seed = 7;

    std::size_t qubit_cap = 26;
    bool dump_amplitudes = false;
    bool trace = false;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/**
 * Builds a RunConfig for `subcommand` from JSON text, then applies
 * `key=value` overrides (dotted keys reach into "hamiltonian"; values are
 * parsed as JSON, falling back to a plain string). Unknown keys, wrong types
 * and out-of-range values raise ConfigError naming the field.
 */
RunConfig parse_config(std::string_view json_text, std::string_view subcommand,
                       const std::vector<std::string> &overrides = {});

/// parse_config on a file; an empty path means "{}". Unreadable files raise
/// IoError.
RunConfig load_config(const std::filesystem::path &path, std::string_view subcommand,
                      const std::vector<std::string> &overrides = {});

/// Canonical JSON: sorted keys, every resolved field, no whitespace.
std::string to_json(const RunConfig &config);

/// 64-bit FNV-1a of to_json(config), as 16 lowercase hex digits.
std::string config_hash(const RunConfig &config);

} // namespace sqaoa
