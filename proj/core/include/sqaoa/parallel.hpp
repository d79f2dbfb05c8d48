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
#include <functional>

namespace sqaoa {

/// Environment variable holding the worker-pool size.
inline constexpr const char *kWorkersEnv = "SNAPSHOT_QAOA_WORKERS";

/// SNAPSHOT_QAOA_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t default_workers();

/**
 * Splits [0, count) into at most `workers` contiguous chunks and runs
 * body(begin, end) on each, one std::thread per chunk. Exceptions from any
 * chunk are rethrown on the calling thread after all chunks finish.
 * workers == 0 means default_workers().
 */
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t begin, std::size_t end)> &body);

} // namespace sqaoa
