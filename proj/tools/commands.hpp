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

#include <filesystem>
#include <iosfwd>

#include "sqaoa/config.hpp"

namespace sqaoa::cli {

struct Context {
    RunConfig config;
    std::filesystem::path out_dir;
    bool resume = false;
    std::ostream *out = nullptr;
    std::ostream *log = nullptr;
};

/// Runs `ctx.config.subcommand`. Library exceptions propagate unchanged so
/// main() can map them to exit codes.
void dispatch(const Context &ctx);

} // namespace sqaoa::cli
