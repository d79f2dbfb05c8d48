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


#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sqaoa/config.hpp"
#include "sqaoa/errors.hpp"
#include "sqaoa/parallel.hpp"
#include "sqaoa/records.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kOther = 1,
    kConfig = 2,
    kNumeric = 3,
    kIo = 4,
};

int fail(int code, const std::string &message) {
    std::cerr << "snapshot-qaoa: error: " << message << '\n';
    return code;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Snapshot-QAOA simulator and experiment harness", "snapshot-qaoa"};
    app.set_version_flag("--version", sqaoa::code_version());
    app.footer(std::string("Worker threads: ") + sqaoa::kWorkersEnv +
               " (default: hardware concurrency).\n"
               "Exit codes: 0 ok, 2 config error, 3 numeric failure, 4 I/O failure, 1 other.");

    std::string subcommand;
    std::string config_path;
    std::vector<std::string> assignments;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    bool resume = false;

    app.add_option("subcommand", subcommand, "One of the experiment subcommands")
        ->required()
        ->check(CLI::IsMember(sqaoa::known_subcommands()));
    app.add_option("--config", config_path, "JSON config file; omitted keys take defaults");
    app.add_option("--set", assignments, "Override a config key, e.g. hamiltonian.J2=1/2")
        ->allow_extra_args(false);
    app.add_option("--out", out_dir, "Output directory")->required();
    app.add_option("--seed", seed, "Override the config seed");
    app.add_flag("--resume", resume, "Continue an interrupted converge or heatmap run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    if (seed) {
        assignments.push_back("seed=" + std::to_string(*seed));
    }

    try {
        sqaoa::cli::Context ctx;
        ctx.config = sqaoa::load_config(config_path, subcommand, assignments);
        ctx.out_dir = out_dir;
        ctx.resume = resume;
        ctx.out = &std::cout;
        ctx.log = &std::cerr;
        sqaoa::cli::dispatch(ctx);
    } catch (const sqaoa::ConfigError &e) {
        return fail(kConfig, e.what());
    } catch (const sqaoa::NumericError &e) {
        return fail(kNumeric, e.what());
    } catch (const sqaoa::IoError &e) {
        return fail(kIo, e.what());
    } catch (const std::filesystem::filesystem_error &e) {
        return fail(kIo, e.what());
    } catch (const std::exception &e) {
        return fail(kOther, e.what());
    }
    return kOk;
}
