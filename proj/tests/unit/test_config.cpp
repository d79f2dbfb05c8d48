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
#include <fstream>

#include "sqaoa/config.hpp"
#include "sqaoa/errors.hpp"

namespace sqaoa {
namespace {

void expect_config_error(std::string_view json, std::string_view subcommand,
                         const std::string &needle, const std::vector<std::string> &sets = {}) {
    try {
        parse_config(json, subcommand, sets);
        FAIL() << "expected ConfigError for " << json;
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
}

TEST(ParseConfig, GridDefaults) {
    const auto c = parse_config("{}", "grid-t");
    EXPECT_EQ(c.p, 1u);
    EXPECT_EQ(c.t_lo, 0.0);
    EXPECT_EQ(c.t_hi, 1.0);
    EXPECT_EQ(c.dt, 0.01);
    const auto c4 = parse_config(R"({"p": 4})", "grid-t");
    EXPECT_EQ(c4.t_hi, 4.0);
}

TEST(ParseConfig, HeatmapDefaults) {
    const auto c = parse_config("", "heatmap");
    EXPECT_EQ(c.epsilon, 0.01);
    EXPECT_EQ(c.p_cap, 250u);
    EXPECT_EQ(c.j2_grid.size(), 21u);
    EXPECT_EQ(c.bx_grid.size(), 39u);
    const auto r = parse_config(R"({"refine": true})", "heatmap");
    EXPECT_EQ(r.p_cap, 20u);
}

TEST(ParseConfig, TorusDefaultsAndFractions) {
    const auto c = parse_config(R"({"hamiltonian": {"J2": "1/2", "Bx": 0.3}})", "period");
    EXPECT_EQ(c.hamiltonian.kind, HamiltonianSpec::Kind::Torus);
    EXPECT_EQ(c.hamiltonian.rows, 3u);
    EXPECT_EQ(c.hamiltonian.j1, Fraction(1));
    EXPECT_EQ(c.hamiltonian.j2, Fraction(1, 2));
    EXPECT_EQ(c.hamiltonian.bx, Fraction(3, 10));
}

TEST(ParseConfig, EdgeListHamiltonian) {
    const auto c = parse_config(
        R"({"hamiltonian": {"edge_list_path": "g.txt", "c0": 0, "c1": 2}})", "gs");
    EXPECT_EQ(c.hamiltonian.kind, HamiltonianSpec::Kind::EdgeList);
    EXPECT_EQ(c.hamiltonian.edge_list_path, "g.txt");
    EXPECT_EQ(c.hamiltonian.c0, Fraction(0));
    EXPECT_EQ(c.hamiltonian.c1, Fraction(2));
}

TEST(ParseConfig, TqaMaxCutDepthDefault) {
    EXPECT_EQ(parse_config("{}", "tqa-maxcut").p, 5u);
}

TEST(ParseConfig, RejectsNegativeDepth) {
    expect_config_error(R"({"p": -3})", "run", "p:");
    expect_config_error(R"({"p": 0})", "run", "p:");
    expect_config_error(R"({"p": 1.5})", "run", "p:");
}

TEST(ParseConfig, RejectsUnknownKeys) {
    expect_config_error(R"({"pp": 3})", "run", "pp: unknown key");
    expect_config_error(R"({"hamiltonian": {"J3": 1}})", "run", "hamiltonian.J3");
}

TEST(ParseConfig, RejectsMalformedJson) {
    expect_config_error(R"({"p": )", "run", "malformed JSON");
    expect_config_error("[1, 2]", "run", "object");
}

TEST(ParseConfig, RejectsOutOfRangeValues) {
    expect_config_error(R"({"dt": 0})", "grid-t", "dt");
    expect_config_error(R"({"epsilon": -0.1})", "heatmap", "epsilon");
    expect_config_error(R"({"t_lo": 2, "t_hi": 1})", "grid-t", "t_hi");
    expect_config_error(R"({"hamiltonian": {"rows": 2}})", "gs", "hamiltonian.rows");
    expect_config_error(R"j({"hamiltonian": {"Bx": "sqrt(2)"}})j", "gs", "hamiltonian.Bx");
    expect_config_error(R"({"hamiltonian": {"J2": 1, "c0": 1}})", "gs", "hamiltonian");
    expect_config_error(R"({"refine": "yes"})", "converge", "refine");
    expect_config_error(R"({"j2_grid": []})", "heatmap", "j2_grid");
}

TEST(ParseConfig, RejectsUnknownSubcommand) {
    EXPECT_THROW(parse_config("{}", "dance"), ConfigError);
}

TEST(ParseConfig, OverridesUseDottedKeys) {
    const auto c = parse_config(R"({"p": 2})", "run",
                                {"p=7", "hamiltonian.J2=0.25", "refine=true", "t=2.5"});
    EXPECT_EQ(c.p, 7u);
    EXPECT_EQ(c.hamiltonian.j2, Fraction(1, 4));
    EXPECT_TRUE(c.refine);
    EXPECT_EQ(c.t, 2.5);
    const auto s = parse_config("{}", "gs", {"hamiltonian.J2=1/3"});
    EXPECT_EQ(s.hamiltonian.j2, Fraction(1, 3));
    expect_config_error("{}", "run", "--set", {"novalue"});
    expect_config_error("{}", "run", "bogus", {"bogus=1"});
}

TEST(ConfigSerialization, RoundTrips) {
    const auto c = parse_config(
        R"({"hamiltonian": {"rows": 3, "cols": 4, "J2": "2/7", "Bx": 0.15}, "p": 9,
            "t_hi": 0.1, "rho1": "3/2", "j2_grid": [0.1, 0.2], "seed": 18446744073709551615})",
        "converge");
    const auto back = parse_config(to_json(c), "converge");
    EXPECT_EQ(back, c);
    EXPECT_EQ(to_json(back), to_json(c));
}

TEST(ConfigSerialization, RejectsForeignSubcommand) {
    const auto c = parse_config("{}", "curve");
    EXPECT_THROW(parse_config(to_json(c), "heatmap"), ConfigError);
}

TEST(ConfigHash, ChangesWithAnyField) {
    const auto base = parse_config("{}", "converge");
    const std::string h = config_hash(base);
    EXPECT_EQ(h.size(), 16u);
    EXPECT_EQ(h, config_hash(parse_config("{}", "converge")));
    for (const char *set : {"p_max=21", "hamiltonian.Bx=0.5", "dt=0.02", "refine=true",
                            "seed=1", "trace=true"}) {
        EXPECT_NE(config_hash(parse_config("{}", "converge", {set})), h) << set;
    }
    // Spelling the default explicitly is the same config.
    EXPECT_EQ(config_hash(parse_config(R"({"dt": 0.01})", "converge")), h);
}

TEST(LoadConfig, ReadsFilesAndReportsMissingOnes) {
    const auto path = std::filesystem::temp_directory_path() / "sqaoa_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"p": 3})";
    }
    EXPECT_EQ(load_config(path, "run").p, 3u);
    std::filesystem::remove(path);
    EXPECT_THROW(load_config(path, "run"), IoError);
    EXPECT_EQ(load_config("", "run").p, 1u);
}

} // namespace
} // namespace sqaoa
