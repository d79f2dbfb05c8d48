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

#include "sqaoa/records.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "json_compat.hpp"
#include "sqaoa/errors.hpp"

#ifndef SQAOA_VERSION_STRING
#define SQAOA_VERSION_STRING "unknown"
#endif

namespace sqaoa {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string> &fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += fields[i];
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

std::string format_field(const CsvField &field) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(const std::string &v) const { return v; }
        std::string operator()(bool v) const { return v ? "1" : "0"; }
    };
    return std::visit(Visitor{}, field);
}

double parse_number(const std::string &text, const std::string &column) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError("csv column " + column + ": '" + text + "' is not a number");
    }
}

std::optional<double> parse_optional(const std::string &text, const std::string &column) {
    if (text.empty()) {
        return std::nullopt;
    }
    return parse_number(text, column);
}

json sidecar_value(const SidecarValue &value) {
    struct Visitor {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(double v) const { return v; }
        json operator()(std::int64_t v) const { return v; }
        json operator()(const std::string &v) const { return v; }
        json operator()(bool v) const { return v; }
    };
    return std::visit(Visitor{}, value);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string code_version() { return SQAOA_VERSION_STRING; }

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

CsvWriter::CsvWriter(std::filesystem::path path, std::vector<std::string> header, bool append)
    : path_(std::move(path)), header_(std::move(header)) {
    bool need_header = true;
    if (append) {
        std::error_code ec;
        if (std::filesystem::exists(path_, ec) && std::filesystem::file_size(path_, ec) > 0) {
            std::ifstream in(path_);
            std::string first;
            std::getline(in, first);
            if (first != join(header_)) {
                throw IoError("cannot append to '" + path_.string() + "': header is '" + first +
                              "', expected '" + join(header_) + "'");
            }
            need_header = false;
        }
    }
    out_.open(path_, append ? std::ios::app : std::ios::trunc);
    if (!out_) {
        throw IoError("cannot open '" + path_.string() + "' for writing");
    }
    if (need_header) {
        out_ << join(header_) << '\n';
        out_.flush();
        if (!out_) {
            throw IoError("write failed on '" + path_.string() + "'");
        }
    }
}

void CsvWriter::write_row(const std::vector<CsvField> &row) {
    if (row.size() != header_.size()) {
        throw ConfigError("csv row has " + std::to_string(row.size()) + " fields, header has " +
                          std::to_string(header_.size()));
    }
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto &f : row) {
        fields.push_back(format_field(f));
    }
    out_ << join(fields) << '\n';
    out_.flush();
    if (!out_) {
        throw IoError("write failed on '" + path_.string() + "'");
    }
    ++rows_;
}

std::size_t CsvTable::column(const std::string &name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw ConfigError("csv has no column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("'" + path.string() + "' is empty");
    }
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (fields.size() != table.header.size()) {
            // A partially written last line from an interrupted run.
            if (in.peek() == std::char_traits<char>::eof()) {
                break;
            }
            throw IoError("'" + path.string() + "': row " + std::to_string(table.rows.size() + 1) +
                          " has " + std::to_string(fields.size()) + " fields");
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

void sort_csv_by_keys(const std::filesystem::path &path,
                      const std::vector<std::string> &key_columns) {
    CsvTable table = read_csv(path);
    std::vector<std::size_t> cols;
    for (const auto &name : key_columns) {
        cols.push_back(table.column(name));
    }
    std::vector<std::pair<std::vector<double>, std::vector<std::string>>> keyed;
    keyed.reserve(table.rows.size());
    for (auto &row : table.rows) {
        std::vector<double> key;
        for (std::size_t c : cols) {
            key.push_back(parse_number(row[c], table.header[c]));
        }
        keyed.emplace_back(std::move(key), std::move(row));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });

    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << join(table.header) << '\n';
        for (const auto &[_, row] : keyed) {
            out << join(row) << '\n';
        }
        out.flush();
        if (!out) {
            throw IoError("write failed on '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot replace '" + path.string() + "': " + ec.message());
    }
}

const std::vector<std::string> &record_header() {
    static const std::vector<std::string> header = {
        "rows",          "cols",   "J1",  "J2",      "Bx",
        "p",             "T",      "energy_unrefined", "energy_refined", "ground_energy",
        "gap",           "rel_err", "rel_err_refined", "non_monotone", "non_monotone_refined"};
    return header;
}

std::vector<CsvField> record_row(const ExperimentRecord &r) {
    auto opt = [](const std::optional<double> &v) -> CsvField {
        if (v) {
            return *v;
        }
        return std::monostate{};
    };
    return {static_cast<std::uint64_t>(r.instance.rows),
            static_cast<std::uint64_t>(r.instance.cols),
            r.instance.j1,
            r.instance.j2,
            r.instance.bx,
            static_cast<std::uint64_t>(r.p),
            r.t_used,
            r.energy_unrefined,
            opt(r.energy_refined),
            r.ground_energy,
            r.gap,
            r.rel_err,
            opt(r.rel_err_refined),
            r.non_monotone,
            r.non_monotone_refined};
}

ExperimentRecord parse_record_row(const CsvTable &table, std::size_t row) {
    const auto &fields = table.rows.at(row);
    auto get = [&](const char *name) -> const std::string & { return fields[table.column(name)]; };
    auto num = [&](const char *name) { return parse_number(get(name), name); };
    ExperimentRecord r;
    r.instance.rows = static_cast<std::size_t>(num("rows"));
    r.instance.cols = static_cast<std::size_t>(num("cols"));
    r.instance.j1 = num("J1");
    r.instance.j2 = num("J2");
    r.instance.bx = num("Bx");
    r.p = static_cast<std::size_t>(num("p"));
    r.t_used = num("T");
    r.energy_unrefined = num("energy_unrefined");
    r.energy_refined = parse_optional(get("energy_refined"), "energy_refined");
    r.ground_energy = num("ground_energy");
    r.gap = num("gap");
    r.rel_err = num("rel_err");
    r.rel_err_refined = parse_optional(get("rel_err_refined"), "rel_err_refined");
    r.non_monotone = get("non_monotone") == "1";
    r.non_monotone_refined = get("non_monotone_refined") == "1";
    return r;
}

const std::vector<std::string> &heatmap_header() {
    static const std::vector<std::string> header = {"J2", "Bx", "min_p"};
    return header;
}

void write_sidecar(const std::filesystem::path &path, const Sidecar &s) {
    json j;
    j["subcommand"] = s.subcommand;
    try {
        j["config"] = json::parse(s.config_json);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("sidecar config is not JSON: ") + e.what());
    }
    j["config_hash"] = s.config_hash;
    j["code_version"] = code_version();
    j["created_utc"] = utc_timestamp();
    j["wall_clock_seconds"] = s.wall_clock_seconds;
    json seeds = json::object();
    for (const auto &[name, value] : s.seeds) {
        seeds[name] = value;
    }
    j["seeds"] = seeds;
    json counts = json::object();
    for (const auto &[name, value] : s.record_counts) {
        counts[name] = value;
    }
    j["record_counts"] = counts;
    json results = json::object();
    for (const auto &[name, value] : s.results) {
        results[name] = sidecar_value(value);
    }
    j["results"] = results;

    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        out << j.dump(2) << '\n';
        out.flush();
        if (!out) {
            throw IoError("write failed on '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot replace '" + path.string() + "': " + ec.message());
    }
}

std::optional<std::string> read_sidecar_hash(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    try {
        const json j = json::parse(in);
        if (j.contains("config_hash") && j["config_hash"].is_string()) {
            return j["config_hash"].get<std::string>();
        }
    } catch (const json::parse_error &) {
    }
    return std::nullopt;
}

} // namespace sqaoa
