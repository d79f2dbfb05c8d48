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
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqaoa/experiments.hpp"

namespace sqaoa {

/// Library version string baked in at build time.
std::string code_version();

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

/// monostate prints as an empty field; bool prints as 0 / 1.
using CsvField = std::variant<std::monostate, double, std::int64_t, std::uint64_t, std::string, bool>;

/**
 * Line-oriented CSV writer with a fixed header. Every row is flushed as soon
 * as it is written so interrupted sweeps keep what they finished.
 */
class CsvWriter {
  public:
    /// append = false truncates. append = true keeps an existing file whose
    /// header matches (IoError if it does not) and writes the header only when
    /// the file is new or empty.
    CsvWriter(std::filesystem::path path, std::vector<std::string> header, bool append = false);

    void write_row(const std::vector<CsvField> &row);

    [[nodiscard]] std::size_t rows_written() const noexcept { return rows_; }
    [[nodiscard]] const std::filesystem::path &path() const noexcept { return path_; }
    [[nodiscard]] const std::vector<std::string> &header() const noexcept { return header_; }

  private:
    std::filesystem::path path_;
    std::vector<std::string> header_;
    std::ofstream out_;
    std::size_t rows_ = 0;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Index of `name` in the header; ConfigError when missing.
    [[nodiscard]] std::size_t column(const std::string &name) const;
};

/// Plain comma-separated reader (no quoting; the writer never needs it).
CsvTable read_csv(const std::filesystem::path &path);

/// Rewrites the file with its data rows sorted by the numeric values of
/// `key_columns`, lexicographically. Row order then no longer depends on
/// which worker finished first.
void sort_csv_by_keys(const std::filesystem::path &path,
                      const std::vector<std::string> &key_columns);

/// rows,cols,J1,J2,Bx,p,T,energy_unrefined,energy_refined,ground_energy,gap,
/// rel_err,rel_err_refined,non_monotone,non_monotone_refined
const std::vector<std::string> &record_header();
std::vector<CsvField> record_row(const ExperimentRecord &record);
ExperimentRecord parse_record_row(const CsvTable &table, std::size_t row);

/// J2,Bx,min_p (min_p = -1 when the threshold was not reached).
const std::vector<std::string> &heatmap_header();

using SidecarValue = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

/// Provenance written next to every CSV.
struct Sidecar {
    std::string subcommand;
    /// Canonical JSON of the resolved config (see to_json).
    std::string config_json;
    std::string config_hash;
    std::vector<std::pair<std::string, std::uint64_t>> seeds;
    double wall_clock_seconds = 0.0;
    std::vector<std::pair<std::string, std::size_t>> record_counts;
    std::vector<std::pair<std::string, SidecarValue>> results;
};

/// Writes via a temporary file and rename.
void write_sidecar(const std::filesystem::path &path, const Sidecar &sidecar);

/// config_hash recorded in an existing sidecar; nullopt when the file is
/// missing or has none.
std::optional<std::string> read_sidecar_hash(const std::filesystem::path &path);

} // namespace sqaoa
