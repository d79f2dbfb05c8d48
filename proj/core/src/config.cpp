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

#include "sqaoa/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json_compat.hpp"
#include "sqaoa/errors.hpp"
#include "sqaoa/experiments.hpp"

namespace sqaoa {

using nlohmann::json;

namespace {

const std::set<std::string> &top_level_keys() {
    static const std::set<std::string> keys = {
        "hamiltonian", "p",        "t",        "t_lo",          "t_hi",        "dt",
        "full_period", "epsilon",  "p_cap",    "p_max",         "p_start",     "refine",
        "samples",     "tol",      "max_iter", "bfgs_max_iter", "grad_tol",    "j2_grid",
        "bx_grid",     "rho0",     "rho1",     "n",             "degree",      "t_max",
        "t_samples",   "seed",     "graph_seed", "qubit_cap",   "dump_amplitudes",
        "trace",       "subcommand"};
    return keys;
}

const std::set<std::string> kTorusKeys = {"rows", "cols", "J1", "J2", "Bx"};
const std::set<std::string> kEdgeListKeys = {"edge_list_path", "c0", "c1"};

[[noreturn]] void field_error(const std::string &field, const std::string &message) {
    throw ConfigError(field + ": " + message);
}

std::uint64_t get_u64(const json &v, const std::string &field) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_number_integer()) {
        field_error(field, "must be non-negative, got " + v.dump());
    }
    field_error(field, "expected an integer, got " + v.dump());
}

std::size_t get_size(const json &v, const std::string &field, std::size_t min_value) {
    const std::uint64_t raw = get_u64(v, field);
    if (raw < min_value) {
        field_error(field, "must be >= " + std::to_string(min_value) + ", got " + v.dump());
    }
    if (raw > std::numeric_limits<std::size_t>::max()) {
        field_error(field, "out of range");
    }
    return static_cast<std::size_t>(raw);
}

double get_double(const json &v, const std::string &field) {
    if (!v.is_number()) {
        field_error(field, "expected a number, got " + v.dump());
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        field_error(field, "must be finite");
    }
    return x;
}

bool get_bool(const json &v, const std::string &field) {
    if (!v.is_boolean()) {
        field_error(field, "expected true or false, got " + v.dump());
    }
    return v.get<bool>();
}

std::string get_string(const json &v, const std::string &field) {
    if (!v.is_string()) {
        field_error(field, "expected a string, got " + v.dump());
    }
    return v.get<std::string>();
}

/// Numbers go through their shortest decimal form; strings may be "a/b".
Fraction get_fraction(const json &v, const std::string &field) {
    std::optional<Fraction> f;
    if (v.is_string()) {
        f = parse_fraction(v.get<std::string>());
    } else if (v.is_number_integer()) {
        f = Fraction(v.get<std::int64_t>());
    } else if (v.is_number_unsigned()) {
        f = Fraction(v.get<std::uint64_t>());
    } else if (v.is_number()) {
        f = fraction_from_decimal(v.get<double>());
    }
    if (!f) {
        field_error(field, "expected a rational number or \"a/b\" string, got " + v.dump());
    }
    return *f;
}

std::vector<double> get_grid(const json &v, const std::string &field) {
    if (!v.is_array() || v.empty()) {
        field_error(field, "expected a non-empty array of numbers");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_double(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

HamiltonianSpec parse_hamiltonian(const json &v) {
    if (!v.is_object()) {
        field_error("hamiltonian", "expected an object");
    }
    HamiltonianSpec spec;
    bool any_torus = false;
    for (const auto &[key, _] : v.items()) {
        if (kTorusKeys.count(key) != 0) {
            any_torus = true;
        } else if (kEdgeListKeys.count(key) != 0) {
            spec.kind = HamiltonianSpec::Kind::EdgeList;
        } else {
            field_error("hamiltonian." + key, "unknown key");
        }
    }
    if (any_torus && spec.kind == HamiltonianSpec::Kind::EdgeList) {
        field_error("hamiltonian", "torus keys (rows, cols, J1, J2, Bx) cannot be mixed with "
                                   "edge-list keys (edge_list_path, c0, c1)");
    }
    if (spec.kind == HamiltonianSpec::Kind::Torus) {
        if (v.contains("rows")) spec.rows = get_size(v["rows"], "hamiltonian.rows", 3);
        if (v.contains("cols")) spec.cols = get_size(v["cols"], "hamiltonian.cols", 3);
        if (v.contains("J1")) spec.j1 = get_fraction(v["J1"], "hamiltonian.J1");
        if (v.contains("J2")) spec.j2 = get_fraction(v["J2"], "hamiltonian.J2");
        if (v.contains("Bx")) spec.bx = get_fraction(v["Bx"], "hamiltonian.Bx");
        if (spec.bx < 0) {
            field_error("hamiltonian.Bx", "must be >= 0");
        }
    } else {
        if (!v.contains("edge_list_path")) {
            field_error("hamiltonian.edge_list_path", "required when c0/c1 are given");
        }
        spec.edge_list_path = get_string(v["edge_list_path"], "hamiltonian.edge_list_path");
        if (v.contains("c0")) spec.c0 = get_fraction(v["c0"], "hamiltonian.c0");
        if (v.contains("c1")) spec.c1 = get_fraction(v["c1"], "hamiltonian.c1");
        if (spec.c0 < 0) {
            field_error("hamiltonian.c0", "must be >= 0");
        }
        if (spec.c1 <= 0) {
            field_error("hamiltonian.c1", "must be > 0");
        }
    }
    return spec;
}

json hamiltonian_json(const HamiltonianSpec &spec) {
    if (spec.kind == HamiltonianSpec::Kind::Torus) {
        return {{"rows", spec.rows},
                {"cols", spec.cols},
                {"J1", fraction_string(spec.j1)},
                {"J2", fraction_string(spec.j2)},
                {"Bx", fraction_string(spec.bx)}};
    }
    return {{"edge_list_path", spec.edge_list_path},
            {"c0", fraction_string(spec.c0)},
            {"c1", fraction_string(spec.c1)}};
}

json parse_override_value(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &) {
        return text;
    }
}

void apply_override(json &root, const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    const std::string key = assignment.substr(0, eq);
    json *node = &root;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot - start);
        if (part.empty()) {
            throw ConfigError("--set: empty path component in '" + key + "'");
        }
        if (dot == std::string::npos) {
            (*node)[part] = parse_override_value(assignment.substr(eq + 1));
            return;
        }
        json &child = (*node)[part];
        if (child.is_null()) {
            child = json::object();
        } else if (!child.is_object()) {
            throw ConfigError("--set: '" + key.substr(0, dot) + "' is not an object");
        }
        node = &child;
        start = dot + 1;
    }
}

} // namespace

const std::vector<std::string> &known_subcommands() {
    static const std::vector<std::string> names = {
        "gs",       "run",       "period", "grid-t",  "refine",         "converge",
        "heatmap",  "curve",     "regress", "period-scaling", "tqa-maxcut"};
    return names;
}

RunConfig parse_config(std::string_view json_text, std::string_view subcommand,
                       const std::vector<std::string> &overrides) {
    const auto &names = known_subcommands();
    if (std::find(names.begin(), names.end(), subcommand) == names.end()) {
        throw ConfigError("unknown subcommand '" + std::string(subcommand) + "'");
    }

    json root;
    if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        root = json::object();
    } else {
        try {
            root = json::parse(json_text);
        } catch (const json::parse_error &e) {
            throw ConfigError(std::string("config: malformed JSON: ") + e.what());
        }
    }
    if (!root.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    for (const auto &o : overrides) {
        apply_override(root, o);
    }
    for (const auto &[key, _] : root.items()) {
        if (top_level_keys().count(key) == 0) {
            field_error(key, "unknown key");
        }
    }
    if (root.contains("subcommand") && get_string(root["subcommand"], "subcommand") != subcommand) {
        field_error("subcommand", "config was written for '" +
                                      root["subcommand"].get<std::string>() + "', not '" +
                                      std::string(subcommand) + "'");
    }

    RunConfig c;
    c.subcommand = std::string(subcommand);
    auto has = [&](const char *key) { return root.contains(key) && !root[key].is_null(); };

    if (has("hamiltonian")) c.hamiltonian = parse_hamiltonian(root["hamiltonian"]);

    c.p = subcommand == "tqa-maxcut" ? 5 : 1;
    if (has("p")) c.p = get_size(root["p"], "p", 1);
    if (has("t")) c.t = get_double(root["t"], "t");
    if (has("t_lo")) c.t_lo = get_double(root["t_lo"], "t_lo");
    c.t_hi = static_cast<double>(c.p);
    if (has("t_hi")) c.t_hi = get_double(root["t_hi"], "t_hi");
    if (has("dt")) c.dt = get_double(root["dt"], "dt");
    if (has("full_period")) c.full_period = get_bool(root["full_period"], "full_period");
    if (has("epsilon")) c.epsilon = get_double(root["epsilon"], "epsilon");
    if (has("refine")) c.refine = get_bool(root["refine"], "refine");
    c.p_cap = c.refine ? 20 : 250;
    if (has("p_cap")) c.p_cap = get_size(root["p_cap"], "p_cap", 1);
    if (has("p_max")) c.p_max = get_size(root["p_max"], "p_max", 1);
    if (has("p_start")) c.p_start = get_size(root["p_start"], "p_start", 1);
    if (has("samples")) c.samples = get_size(root["samples"], "samples", 2);
    if (has("tol")) c.tol = get_double(root["tol"], "tol");
    if (has("max_iter")) c.max_iter = get_size(root["max_iter"], "max_iter", 1);
    if (has("bfgs_max_iter")) c.bfgs_max_iter = get_size(root["bfgs_max_iter"], "bfgs_max_iter", 0);
    if (has("grad_tol")) c.grad_tol = get_double(root["grad_tol"], "grad_tol");
    c.j2_grid = has("j2_grid") ? get_grid(root["j2_grid"], "j2_grid") : default_j2_grid();
    c.bx_grid = has("bx_grid") ? get_grid(root["bx_grid"], "bx_grid") : default_bx_grid();
    if (has("rho0")) c.rho0 = get_fraction(root["rho0"], "rho0");
    if (has("rho1")) c.rho1 = get_fraction(root["rho1"], "rho1");
    if (has("n")) c.n = get_size(root["n"], "n", 1);
    if (has("degree")) c.degree = get_size(root["degree"], "degree", 1);
    if (has("t_max")) c.t_max = get_double(root["t_max"], "t_max");
    if (has("t_samples")) c.t_samples = get_size(root["t_samples"], "t_samples", 2);
    if (has("seed")) c.seed = get_u64(root["seed"], "seed");
    if (has("graph_seed")) c.graph_seed = get_u64(root["graph_seed"], "graph_seed");
    if (has("qubit_cap")) c.qubit_cap = get_size(root["qubit_cap"], "qubit_cap", 1);
    if (has("dump_amplitudes")) c.dump_amplitudes = get_bool(root["dump_amplitudes"], "dump_amplitudes");
    if (has("trace")) c.trace = get_bool(root["trace"], "trace");

    if (c.t < 0) field_error("t", "must be >= 0");
    if (c.t_lo < 0) field_error("t_lo", "must be >= 0");
    if (c.t_hi < c.t_lo) field_error("t_hi", "must be >= t_lo");
    if (!(c.dt > 0)) field_error("dt", "must be > 0");
    if (!(c.epsilon > 0)) field_error("epsilon", "must be > 0");
    if (!(c.tol > 0)) field_error("tol", "must be > 0");
    if (!(c.grad_tol > 0)) field_error("grad_tol", "must be > 0");
    if (!(c.t_max > 0)) field_error("t_max", "must be > 0");
    if (c.p_start > c.p_max && subcommand == "converge") field_error("p_start", "must be <= p_max");
    if (c.rho0 && *c.rho0 <= 0) field_error("rho0", "must be > 0");
    if (c.rho1 && *c.rho1 <= 0) field_error("rho1", "must be > 0");
    if (c.qubit_cap > 34) field_error("qubit_cap", "must be <= 34");
    return c;
}

RunConfig load_config(const std::filesystem::path &path, std::string_view subcommand,
                      const std::vector<std::string> &overrides) {
    if (path.empty()) {
        return parse_config("{}", subcommand, overrides);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config file '" + path.string() + "'");
    }
    return parse_config(buf.str(), subcommand, overrides);
}

std::string to_json(const RunConfig &c) {
    json j = {{"subcommand", c.subcommand},
              {"hamiltonian", hamiltonian_json(c.hamiltonian)},
              {"p", c.p},
              {"t", c.t},
              {"t_lo", c.t_lo},
              {"t_hi", c.t_hi},
              {"dt", c.dt},
              {"full_period", c.full_period},
              {"epsilon", c.epsilon},
              {"p_cap", c.p_cap},
              {"p_max", c.p_max},
              {"p_start", c.p_start},
              {"refine", c.refine},
              {"samples", c.samples},
              {"tol", c.tol},
              {"max_iter", c.max_iter},
              {"bfgs_max_iter", c.bfgs_max_iter},
              {"grad_tol", c.grad_tol},
              {"j2_grid", c.j2_grid},
              {"bx_grid", c.bx_grid},
              {"n", c.n},
              {"degree", c.degree},
              {"t_max", c.t_max},
              {"t_samples", c.t_samples},
              {"seed", c.seed},
              {"graph_seed", c.graph_seed},
              {"qubit_cap", c.qubit_cap},
              {"dump_amplitudes", c.dump_amplitudes},
              {"trace", c.trace}};
    if (c.rho0) j["rho0"] = fraction_string(*c.rho0);
    if (c.rho1) j["rho1"] = fraction_string(*c.rho1);
    return j.dump();
}

std::string config_hash(const RunConfig &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_json(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace sqaoa
