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


#include "commands.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#ifdef SQAOA_SYSTEM_JSON
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "sqaoa/eigensolver.hpp"
#include "sqaoa/errors.hpp"
#include "sqaoa/experiments.hpp"
#include "sqaoa/graph.hpp"
#include "sqaoa/optimizer.hpp"
#include "sqaoa/records.hpp"
#include "sqaoa/schedule.hpp"
#include "sqaoa/statevector.hpp"

namespace sqaoa::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Problem {
    TfimHamiltonian h;
    std::optional<InstanceDescriptor> instance;
    std::optional<Fraction> c1_hat;
    std::optional<RationalAngle> rho0;
    std::optional<RationalAngle> rho1;
};

Problem build_problem(const RunConfig &c) {
    const HamiltonianSpec &spec = c.hamiltonian;
    if (spec.kind == HamiltonianSpec::Kind::Torus) {
        if (spec.rows * spec.cols > c.qubit_cap) {
            throw ConfigError("hamiltonian: " + std::to_string(spec.rows * spec.cols) +
                              " qubits exceed qubit_cap = " + std::to_string(c.qubit_cap));
        }
        InstanceDescriptor inst{spec.rows, spec.cols, to_double(spec.j1), to_double(spec.j2),
                                to_double(spec.bx)};
        auto graph = build_j1j2_torus(inst.rows, inst.cols, inst.j1, inst.j2);
        Problem problem{TfimHamiltonian::tfim(std::move(graph), inst.bx, c.qubit_cap), inst,
                        std::nullopt, default_rho0(), std::nullopt};
        if (spec.bx > -1) {
            problem.c1_hat = tfim_c1_hat(spec.bx);
        }
        if (spec.j1 == 1) {
            problem.rho1 = default_rho1(spec.j2);
        } else {
            const Fraction weights[] = {spec.j1, spec.j2};
            problem.rho1 = rho1_for_weights(weights);
        }
        if (c.rho0) problem.rho0 = RationalAngle(*c.rho0);
        if (c.rho1) problem.rho1 = RationalAngle(*c.rho1);
        return problem;
    }

    auto graph = load_edge_list(spec.edge_list_path);
    if (graph.n_vertices() > c.qubit_cap) {
        throw ConfigError("hamiltonian.edge_list: " + std::to_string(graph.n_vertices()) +
                          " qubits exceed qubit_cap = " + std::to_string(c.qubit_cap));
    }
    std::vector<Fraction> weights;
    bool exact = true;
    for (const auto &e : graph.edges()) {
        auto w = fraction_from_decimal(e.weight);
        if (!w) {
            exact = false;
            break;
        }
        weights.push_back(*w);
    }
    Problem problem{TfimHamiltonian(std::move(graph), to_double(spec.c0), to_double(spec.c1),
                                    c.qubit_cap),
                    std::nullopt, std::nullopt, default_rho0(), std::nullopt};
    if (spec.c0 + spec.c1 != 0) {
        problem.c1_hat = spec.c1 / (spec.c0 + spec.c1);
    }
    if (exact) {
        problem.rho1 = rho1_for_weights(weights);
    }
    if (c.rho0) problem.rho0 = RationalAngle(*c.rho0);
    if (c.rho1) problem.rho1 = RationalAngle(*c.rho1);
    return problem;
}

std::optional<RationalAngle> period_of(const Problem &problem, std::size_t p) {
    if (!problem.rho0 || !problem.rho1) {
        return std::nullopt;
    }
    return period(p, problem.c1_hat, *problem.rho0, *problem.rho1);
}

RationalAngle require_period(const Problem &problem, std::size_t p) {
    auto rho = period_of(problem, p);
    if (!rho) {
        throw ConfigError("full_period: no exact period for this Hamiltonian; set rho1 or use "
                          "t_lo/t_hi");
    }
    return *rho;
}

const InstanceDescriptor &require_torus(const Problem &problem, const std::string &subcommand) {
    if (!problem.instance) {
        throw ConfigError("hamiltonian: " + subcommand + " needs a torus instance");
    }
    return *problem.instance;
}

SpectrumResult ground_of(const Problem &problem, const RunConfig &c) {
    LanczosOptions options;
    options.tol = c.tol;
    options.max_iter = c.max_iter;
    options.seed = c.seed;
    return ground_spectrum(problem.h, options);
}

RefineOptions refine_options(const RunConfig &c) { return {c.bfgs_max_iter, c.grad_tol}; }

void ensure_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
}

/// Output files: <out>/<subcommand>.csv and <out>/<subcommand>.json.
fs::path csv_path(const Context &ctx) { return ctx.out_dir / (ctx.config.subcommand + ".csv"); }
fs::path sidecar_path(const Context &ctx) {
    return ctx.out_dir / (ctx.config.subcommand + ".json");
}

SidecarValue to_sidecar_value(const json &v) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return v.get<std::string>();
    return std::monostate{};
}

class Run {
  public:
    explicit Run(const Context &ctx) : ctx_(ctx), start_(std::chrono::steady_clock::now()) {
        ensure_dir(ctx.out_dir);
        sidecar_.subcommand = ctx.config.subcommand;
        sidecar_.config_json = to_json(ctx.config);
        sidecar_.config_hash = config_hash(ctx.config);
        sidecar_.seeds = {{"seed", ctx.config.seed}};
    }

    Sidecar &sidecar() { return sidecar_; }

    void count(const fs::path &file, std::size_t rows) {
        sidecar_.record_counts.emplace_back(file.filename().string(), rows);
    }

    /// Adds every scalar member of `results` to the sidecar.
    void add_results(const json &results) {
        for (const auto &[key, value] : results.items()) {
            if (!value.is_array() && !value.is_object()) {
                sidecar_.results.emplace_back(key, to_sidecar_value(value));
            }
        }
    }

    void finish() {
        sidecar_.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        write_sidecar(sidecar_path(ctx_), sidecar_);
    }

    /// Prints `results` on stdout and records them in the sidecar.
    void finish(const json &results) {
        *ctx_.out << results.dump() << '\n';
        add_results(results);
        finish();
    }

  private:
    const Context &ctx_;
    std::chrono::steady_clock::time_point start_;
    Sidecar sidecar_;
};

/// A resumed run must carry the hash recorded by the interrupted one.
void check_resume_hash(const Context &ctx) {
    const auto recorded = read_sidecar_hash(sidecar_path(ctx));
    if (!recorded) {
        throw ConfigError("resume: no sidecar with a config hash in " + ctx.out_dir.string());
    }
    if (*recorded != config_hash(ctx.config)) {
        throw ConfigError("resume: config hash " + config_hash(ctx.config) +
                          " differs from the interrupted run (" + *recorded + ")");
    }
}

json nullable(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

void write_trace(const fs::path &path, const std::vector<std::pair<double, double>> &trace) {
    CsvWriter writer(path, {"T", "energy"});
    for (const auto &[t, e] : trace) {
        writer.write_row({t, e});
    }
}

GridSearchOptions grid_options(const RunConfig &c, const Problem &problem) {
    GridSearchOptions options;
    options.t_lo = c.t_lo;
    options.t_hi = c.t_hi;
    options.dt_step = c.dt;
    options.keep_trace = c.trace;
    if (c.full_period) {
        options.t_lo = 0.0;
        options.t_hi = require_period(problem, c.p).radians() / 2.0;
    }
    return options;
}

void cmd_gs(const Context &ctx) {
    Run run(ctx);
    const auto problem = build_problem(ctx.config);
    const auto s = ground_of(problem, ctx.config);
    run.finish({{"ground_energy", s.ground_energy},
                {"gap", s.gap},
                {"iterations", s.iterations},
                {"residual", s.residual}});
}

void cmd_run(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    const auto result = run_snapshot_qaoa(problem.h, c.p, c.t);
    const auto s = ground_of(problem, c);
    if (c.dump_amplitudes) {
        write_amplitudes(ctx.out_dir / "amplitudes.bin", result.state);
    }
    run.finish({{"energy", result.energy},
                {"ground_energy", s.ground_energy},
                {"rel_err", relative_error(result.energy, s.ground_energy)}});
}

void cmd_period(const Context &ctx) {
    Run run(ctx);
    const auto problem = build_problem(ctx.config);
    const auto rho = period_of(problem, ctx.config.p);
    if (!rho) {
        run.finish({{"rho_over_pi", nullptr}, {"rho_float", nullptr}});
        return;
    }
    run.finish({{"rho_over_pi", rho->str()}, {"rho_float", rho->radians()}});
}

void cmd_grid_t(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    const auto r = grid_search_T(problem.h, c.p, grid_options(c, problem));
    if (c.trace) {
        const auto path = ctx.out_dir / "grid-t_trace.csv";
        write_trace(path, r.trace);
        run.count(path, r.trace.size());
    }
    run.finish({{"p", c.p},
                {"t_star", r.t_star},
                {"energy", r.energy},
                {"evaluated_points", r.evaluated_points},
                {"t_lo", r.t_lo},
                {"t_hi", r.t_hi},
                {"dt", r.dt_step}});
}

void cmd_refine(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    const auto grid = grid_search_T(problem.h, c.p, grid_options(c, problem));
    const auto init = make_schedule(c.p, grid.t_star, normalize(problem.h).c1_hat);
    const auto r = refine_bfgs(problem.h, init, refine_options(c));

    const auto angles = ctx.out_dir / "refine_angles.csv";
    CsvWriter writer(angles, {"k", "beta", "gamma"});
    for (std::size_t k = 0; k < r.betas.size(); ++k) {
        writer.write_row({static_cast<std::uint64_t>(k + 1), r.betas[k], r.gammas[k]});
    }
    run.count(angles, r.betas.size());
    if (c.trace) {
        const auto path = ctx.out_dir / "refine_trace.csv";
        write_trace(path, grid.trace);
        run.count(path, grid.trace.size());
    }
    run.finish({{"p", c.p},
                {"t_star", grid.t_star},
                {"energy_unrefined", grid.energy},
                {"energy_refined", r.energy},
                {"iterations", r.iterations},
                {"grad_norm", r.grad_norm},
                {"line_search_failed", r.line_search_failed},
                {"betas", r.betas},
                {"gammas", r.gammas}});
}

void cmd_converge(const Context &ctx) {
    const RunConfig &c = ctx.config;
    const auto problem = build_problem(c);
    const auto &instance = require_torus(problem, c.subcommand);
    const auto path = csv_path(ctx);

    ConvergenceOptions options;
    options.p_max = c.p_max;
    options.refine = c.refine;
    options.dt_step = c.dt;
    options.refine_options = refine_options(c);
    options.p_start = c.p_start;

    const bool resuming = ctx.resume && fs::exists(path);
    if (resuming) {
        check_resume_hash(ctx);
        const auto table = read_csv(path);
        if (!table.rows.empty()) {
            auto last = parse_record_row(table, table.rows.size() - 1);
            options.p_start = std::max(options.p_start, last.p + 1);
            options.previous = std::move(last);
        }
    }

    Run run(ctx);
    run.finish(); // marks the directory with this config's hash before any work
    const auto ground = ground_of(problem, c);

    CsvWriter writer(path, record_header(), resuming);
    options.on_record = [&](const ExperimentRecord &r) {
        writer.write_row(record_row(r));
        *ctx.log << "p=" << r.p << " T=" << format_double(r.t_used)
                 << " rel_err=" << format_double(r.rel_err_refined.value_or(r.rel_err)) << '\n';
    };
    if (options.p_start <= options.p_max) {
        convergence_sweep(problem.h, instance, ground, options);
    }

    const auto table = read_csv(path);
    std::vector<ExperimentRecord> records;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        records.push_back(parse_record_row(table, i));
    }
    const auto min_p = threshold_p(problem.h, ground, records, c.epsilon, c.refine);
    run.count(path, records.size());
    run.add_results({{"ground_energy", ground.ground_energy},
                     {"gap", ground.gap},
                     {"epsilon", c.epsilon},
                     {"min_p", min_p ? static_cast<std::int64_t>(*min_p) : kNotReached}});
    run.finish();
}

void cmd_heatmap(const Context &ctx) {
    const RunConfig &c = ctx.config;
    const auto problem = build_problem(c);
    require_torus(problem, c.subcommand);
    const auto cells_path = csv_path(ctx);
    const auto records_path = ctx.out_dir / "heatmap_records.csv";

    std::set<std::pair<std::string, std::string>> done;
    const bool resuming = ctx.resume && fs::exists(cells_path);
    if (resuming) {
        check_resume_hash(ctx);
        const auto table = read_csv(cells_path);
        const auto j2 = table.column("J2");
        const auto bx = table.column("Bx");
        for (const auto &row : table.rows) {
            done.emplace(row[j2], row[bx]);
        }
    }

    Run run(ctx);
    run.finish();

    HeatmapOptions options;
    options.j2_grid = c.j2_grid;
    options.bx_grid = c.bx_grid;
    options.rows = c.hamiltonian.rows;
    options.cols = c.hamiltonian.cols;
    options.j1 = to_double(c.hamiltonian.j1);
    options.epsilon = c.epsilon;
    options.p_cap = c.p_cap;
    options.refine = c.refine;
    options.dt_step = c.dt;
    options.refine_options = refine_options(c);

    const std::size_t total = c.j2_grid.size() * c.bx_grid.size();
    std::size_t finished = done.size();
    CsvWriter cells(cells_path, heatmap_header(), resuming);
    CsvWriter records(records_path, record_header(), resuming);
    options.skip_cell = [&](double j2, double bx) {
        return done.count({format_double(j2), format_double(bx)}) > 0;
    };
    options.on_cell = [&](double j2, double bx, int min_p,
                          const std::vector<ExperimentRecord> &cell_records) {
        for (const auto &r : cell_records) {
            records.write_row(record_row(r));
        }
        cells.write_row({j2, bx, static_cast<std::int64_t>(min_p)});
        ++finished;
        *ctx.log << "[" << finished << "/" << total << "] J2=" << format_double(j2)
                 << " Bx=" << format_double(bx) << " min_p=" << min_p << '\n';
    };
    threshold_heatmap(options);

    sort_csv_by_keys(cells_path, {"J2", "Bx"});
    sort_csv_by_keys(records_path, {"J2", "Bx", "p"});
    run.count(cells_path, read_csv(cells_path).rows.size());
    run.count(records_path, read_csv(records_path).rows.size());
    run.add_results({{"epsilon", c.epsilon}, {"p_cap", c.p_cap}, {"not_reached", kNotReached}});
    run.finish();
}

void cmd_curve(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    double lo = c.t_lo;
    double hi = c.t_hi;
    json results = {{"p", c.p}};
    if (const auto rho = period_of(problem, c.p)) {
        results["rho_over_pi"] = rho->str();
        results["rho_float"] = rho->radians();
        if (c.full_period) {
            lo = 0.0;
            hi = rho->radians();
        }
    } else if (c.full_period) {
        require_period(problem, c.p);
    }
    const auto curve = energy_vs_T_curve(problem.h, c.p, lo, hi, c.samples);
    const auto path = csv_path(ctx);
    write_trace(path, curve);
    run.count(path, curve.size());
    results["t_lo"] = lo;
    results["t_hi"] = hi;
    results["ground_energy"] = ground_of(problem, c).ground_energy;
    run.add_results(results);
    run.finish();
}

void cmd_regress(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    const auto fit = regression_T_vs_p(problem.h, c.p_max, c.dt);
    const auto path = csv_path(ctx);
    CsvWriter writer(path, {"p", "T_star", "energy"});
    CircuitEvaluator evaluator(problem.h);
    for (const auto &[p, t_star] : fit.points) {
        const auto depth = static_cast<std::size_t>(p);
        writer.write_row({static_cast<std::uint64_t>(depth), t_star,
                          evaluator.snapshot_energy(depth, t_star)});
    }
    run.count(path, fit.points.size());
    run.add_results({{"slope", fit.slope},
                     {"intercept", fit.intercept},
                     {"pearson_r", nullable(fit.pearson_r)}});
    run.finish();
}

void cmd_period_scaling(const Context &ctx) {
    const RunConfig &c = ctx.config;
    Run run(ctx);
    const auto problem = build_problem(c);
    if (!problem.rho1) {
        throw ConfigError("rho1: edge weights have no exact value; set rho1 explicitly");
    }
    const auto points = period_scaling(problem.c1_hat, *problem.rho0, *problem.rho1, c.p_max);
    const auto path = csv_path(ctx);
    CsvWriter writer(path, {"p", "rho_over_pi", "rho_float"});
    for (const auto &pt : points) {
        if (pt.rho) {
            writer.write_row({static_cast<std::uint64_t>(pt.p), pt.rho->str(), pt.rho->radians()});
        } else {
            writer.write_row({static_cast<std::uint64_t>(pt.p), std::monostate{}, std::monostate{}});
        }
    }
    run.count(path, points.size());
    run.add_results({{"rho0_over_pi", problem.rho0->str()}, {"rho1_over_pi", problem.rho1->str()}});
    run.finish();
}

void cmd_tqa_maxcut(const Context &ctx) {
    const RunConfig &c = ctx.config;
    if (c.n > c.qubit_cap) {
        throw ConfigError("n: " + std::to_string(c.n) + " qubits exceed qubit_cap = " +
                          std::to_string(c.qubit_cap));
    }
    Run run(ctx);
    run.sidecar().seeds.emplace_back("graph_seed", c.graph_seed);
    const auto rep =
        tqa_maxcut_replication(c.n, c.degree, c.graph_seed, c.p, c.t_samples, c.t_max);
    save_edge_list(ctx.out_dir / "tqa-maxcut_graph.edges", rep.graph);

    const auto path = csv_path(ctx);
    CsvWriter writer(path, {"T", "energy", "approx_ratio"});
    const MaxCutPoint *best = nullptr;
    for (const auto &pt : rep.points) {
        writer.write_row({pt.t, pt.energy, pt.approx_ratio});
        if (best == nullptr || pt.approx_ratio > best->approx_ratio) {
            best = &pt;
        }
    }
    run.count(path, rep.points.size());
    json results = {{"ground_energy", rep.ground_energy}};
    if (best != nullptr) {
        results["best_T"] = best->t;
        results["best_approx_ratio"] = best->approx_ratio;
    }
    run.add_results(results);
    run.finish();
}

} // namespace

void dispatch(const Context &ctx) {
    using Handler = void (*)(const Context &);
    static const std::map<std::string, Handler> handlers = {
        {"gs", cmd_gs},
        {"run", cmd_run},
        {"period", cmd_period},
        {"grid-t", cmd_grid_t},
        {"refine", cmd_refine},
        {"converge", cmd_converge},
        {"heatmap", cmd_heatmap},
        {"curve", cmd_curve},
        {"regress", cmd_regress},
        {"period-scaling", cmd_period_scaling},
        {"tqa-maxcut", cmd_tqa_maxcut},
    };
    const auto it = handlers.find(ctx.config.subcommand);
    if (it == handlers.end()) {
        throw ConfigError("subcommand: unknown '" + ctx.config.subcommand + "'");
    }
    it->second(ctx);
}

} // namespace sqaoa::cli
