// SPDX-License-Identifier: Apache-2.0
//
// fama-lab: fluid-antenna multiple access SIR statistics and Monte-Carlo toolkit
// Copyright (C) 2026 The fama-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FAMA_CLI_HPP
#define FAMA_CLI_HPP

#include "fama/channel.hpp"
#include "fama/experiments.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fama::cli {

inline constexpr const char *kVersion = "0.1.0";

inline constexpr std::uint64_t kPhysicalDefaultRealizations = 100000;
inline constexpr std::uint64_t kMarginalDefaultRealizations = 1000000;

// Grid declared with sweep_* keys; an empty axis means "the base value".
struct SweepGrid {
    std::vector<int> M, U, N;
    std::vector<double> W;
    std::vector<Scheme> scheme;
    std::string command = "fig4";
};

struct RunSettings {
    SystemConfig system;
    SweepGrid sweep;
    std::uint64_t chunk_size = 10000;
    // Keys given in the file or as flags.
    std::set<std::string> explicit_keys;

    bool is_explicit(const std::string &key) const { return explicit_keys.count(key) != 0; }

    // Without an explicit count, marginal-sampler experiments use
    // kMarginalDefaultRealizations.
    std::uint64_t marginal_realizations() const
    {
        return is_explicit("realizations") ? system.realizations : kMarginalDefaultRealizations;
    }
};

// key = value lines, '#' comments. Lines after a "[run]" section header are
// ignored, so a manifest.txt is itself a valid configuration file. `overrides` (flag values) win over the
// file. Throws ConfigError naming the key on unknown keys, malformed values
// or invariant violations.
RunSettings parse_settings(const std::optional<std::filesystem::path> &file,
                           const std::map<std::string, std::string> &overrides = {});
RunSettings parse_settings_text(const std::string &text, const std::map<std::string, std::string> &overrides = {});

SystemConfig parse_config(const std::optional<std::filesystem::path> &file,
                          const std::map<std::string, std::string> &overrides = {});

// Long-format table: gamma, gamma_db, value, ci_low, ci_high, curve_id.
class CurveTable {
public:
    static const char *header();

    void add(double gamma, double value, double ci_low, double ci_high, const std::string &curve);
    void add_exact(double gamma, double value, const std::string &curve) { add(gamma, value, value, value, curve); }

    std::string to_csv() const;
    std::size_t rows() const noexcept { return rows_.size(); }

private:
    struct Row {
        double gamma, value, ci_low, ci_high;
        std::string curve;
    };
    std::vector<Row> rows_;
};

// Port-pair table: port_k, port_l, distance_wl, value, ci_low, ci_high, curve_id.
class PairTable {
public:
    static const char *header();

    void add(std::size_t port_k, std::size_t port_l, double distance, double value, double ci_low, double ci_high,
             const std::string &curve);

    std::string to_csv() const;

private:
    struct Row {
        std::size_t k, l;
        double distance, value, ci_low, ci_high;
        std::string curve;
    };
    std::vector<Row> rows_;
};

// 12 significant digits, the serialization used in every output file.
std::string format_number(double v);

// Ordered key/value record written as manifest.txt.
struct RunManifest {
    std::vector<std::pair<std::string, std::string>> entries;

    void section(const std::string &name);
    void set(const std::string &key, const std::string &value);
    void set(const std::string &key, double value) { set(key, format_number(value)); }
    void set_count(const std::string &key, std::uint64_t value) { set(key, std::to_string(value)); }
    std::string to_text() const;
};

struct OutputFile {
    std::string name;
    std::string contents;
};

struct CommandResult {
    std::vector<OutputFile> files; // CSVs; manifest.txt is appended by write_outputs
    RunManifest manifest;
    bool success = true;
    std::string report; // human-readable summary (validate table)
};

// Writes every file plus manifest.txt into `destination`. On failure the
// files already written are removed and the error is rethrown.
std::vector<std::filesystem::path> write_outputs(CommandResult &result, const std::filesystem::path &destination);

// fig2, fig3, fig4, fig5, validate, sweep.
CommandResult run_command(const std::string &name, const RunSettings &settings,
                          const mc::ExperimentOptions &options = {});

// Command-line entry point; returns the process exit status.
int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace fama::cli

#endif
