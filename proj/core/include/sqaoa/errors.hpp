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

#include <stdexcept>
#include <string>

namespace sqaoa {

/// Invalid arguments, violated preconditions and malformed configuration.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Non-convergence, non-finite values and other numerical breakdowns.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// File-system failures; the message always carries the offending path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when Lanczos runs out of iterations before reaching the requested
/// residual. Carries the best residual seen.
class ConvergenceError : public NumericError {
  public:
    ConvergenceError(const std::string &what, double best_residual)
        : NumericError(what), best_residual_(best_residual) {}

    [[nodiscard]] double best_residual() const noexcept { return best_residual_; }

  private:
    double best_residual_;
};

} // namespace sqaoa
