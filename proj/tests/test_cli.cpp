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

#include "fama/cli.hpp"
#include "fama/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fama;
using namespace fama::cli;
namespace fs = std::filesystem;

namespace {

std::string first_line(const std::string &text) { return text.substr(0, text.find('\n')); }

std::string row_at(const std::string &csv, const std::string &prefix, const std::string &curve)
{
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0 && line.size() >= curve.size() &&
            line.compare(line.size() - curve.size(), curve.size(), curve) == 0)
            return line;
    return {};
}

RunSettings small(const std::string &extra = "")
{
    return parse_settings_text("realizations = 4000\nchunk_size = 1000\n" + extra);
}

} // namespace

TEST_CASE("empty configuration gives the default scenario")
{
    const auto c = parse_config(std::nullopt);
    CHECK(c.M == 8);
    CHECK(c.U == 4);
    CHECK(c.N == 8);
    CHECK(c.W == 0.25);
    CHECK(c.scheme == Scheme::MRT);
    CHECK(c.beta.empty());
    CHECK(c.powers.empty());
}

TEST_CASE("configuration parsing")
{
    const auto s = parse_settings_text("# comment\nscheme = ZF\nM = 4\nU = 4\nbeta = 1, 2, 3, 4\n", {{"N", "3"}});
    CHECK(s.system.scheme == Scheme::ZF);
    CHECK(s.system.M == 4);
    CHECK(s.system.N == 3);
    CHECK(s.system.beta.size() == 4);
    CHECK(s.is_explicit("beta"));
    CHECK_FALSE(s.is_explicit("seed"));

    const auto flag_wins = parse_settings_text("M = 6\n", {{"M", "10"}});
    CHECK(flag_wins.system.M == 10);

    const auto expect_key = [](const std::string &text, const std::string &key) {
        try {
            parse_settings_text(text);
            FAIL("expected ConfigError for " << text);
        } catch (const ConfigError &e) {
            CHECK(e.key() == key);
        }
    };
    expect_key("scheme = ZF\nM = 3\nU = 4\n", "M");
    expect_key("antennas = 8\n", "antennas");
    expect_key("M = eight\n", "M");
    expect_key("scheme = MMSE\n", "scheme");
    expect_key("realizations = 0\n", "realizations");
    expect_key("sweep_command = validate\n", "sweep_command");
}

TEST_CASE("number formatting uses 12 significant digits")
{
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1.2e-4) == "0.00012");
    CHECK(format_number(100.0) == "100");
}

TEST_CASE("golden CSV headers")
{
    CHECK(std::string(CurveTable::header()) == "gamma,gamma_db,value,ci_low,ci_high,curve_id");
    CHECK(std::string(PairTable::header()) == "port_k,port_l,distance_wl,value,ci_low,ci_high,curve_id");
}

TEST_CASE("fig5 emits the tail asymptote at gamma = 100")
{
    const auto r = run_command("fig5", small());
    REQUIRE(r.files.size() == 2);
    CHECK(r.files[0].name == "fig5_mrt.csv");
    CHECK(first_line(r.files[0].contents) == CurveTable::header());
    CHECK(row_at(r.files[0].contents, "100,20,", "tail_asymptote") == "100,20,0.00012,0.00012,0.00012,tail_asymptote");
}

TEST_CASE("fig4 with a single port collapses the envelope")
{
    const auto r = run_command("fig4", small("N = 1\n"));
    const auto &csv = r.files.at(0).contents;
    std::istringstream in(csv);
    std::string line;
    std::map<std::string, std::map<std::string, std::string>> by_gamma;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto last = line.rfind(',');
        const auto gamma = line.substr(0, line.find(','));
        std::istringstream fields(line);
        std::string f;
        for (int i = 0; i < 3; ++i)
            std::getline(fields, f, ',');
        by_gamma[gamma][line.substr(last + 1)] = f;
    }
    REQUIRE(by_gamma.size() == 200);
    for (const auto &[g, curves] : by_gamma) {
        CHECK(curves.at("single_port_upper") == curves.at("lower_bound"));
        CHECK(curves.at("single_port_upper") == curves.at("iid_analytic"));
    }
}

TEST_CASE("fig4 ZF defaults to the external reference location")
{
    const auto r = run_command("fig4", small("scheme = ZF\n"));
    const auto text = r.manifest.to_text();
    CHECK(text.find("reference_mode = external") != std::string::npos);
    const auto member = run_command("fig4", small("scheme = ZF\nreference_mode = member\n"));
    CHECK(member.manifest.to_text().find("reference_mode = member") != std::string::npos);
}

TEST_CASE("outputs are deterministic and manifests differ only in seed and timing")
{
    const auto a = run_command("fig3", small("W = 4\n"));
    const auto b = run_command("fig3", small("W = 4\n"));
    REQUIRE(a.files.size() == 1);
    CHECK(a.files[0].contents == b.files[0].contents);
    CHECK(first_line(a.files[0].contents) == PairTable::header());

    const auto c = run_command("fig3", small("W = 4\nseed = 99\n"));
    REQUIRE(a.manifest.entries.size() == c.manifest.entries.size());
    for (std::size_t i = 0; i < a.manifest.entries.size(); ++i) {
        const auto &[k, v] = a.manifest.entries[i];
        CHECK(k == c.manifest.entries[i].first);
        if (k != "seed" && k != "wall_clock_seconds")
            CHECK_MESSAGE(v == c.manifest.entries[i].second, k);
    }
}

TEST_CASE("write_outputs writes files and a manifest that replays the run")
{
    const fs::path dir = fs::temp_directory_path() / "fama_lab_cli_test";
    fs::remove_all(dir);
    auto r = run_command("fig2", small());
    const auto files = write_outputs(r, dir);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "fig2_mrt.csv");
    CHECK(files[1].filename() == "fig2_zf.csv");
    CHECK(files[2].filename() == "manifest.txt");

    const auto replay = parse_settings(dir / "manifest.txt");
    const auto again = run_command("fig2", replay, {0, replay.chunk_size});
    CHECK(again.files[0].contents == r.files[0].contents);
    CHECK(again.files[1].contents == r.files[1].contents);
    fs::remove_all(dir);
}

TEST_CASE("write_outputs removes partial files on failure")
{
    const fs::path dir = fs::temp_directory_path() / "fama_lab_cli_fail";
    fs::remove_all(dir);
    fs::create_directories(dir / "blocker");
    CommandResult r;
    r.files.push_back({"ok.csv", "x\n"});
    r.files.push_back({"blocker", "y\n"}); // a directory: cannot be opened as a file
    CHECK_THROWS(write_outputs(r, dir));
    CHECK_FALSE(fs::exists(dir / "ok.csv"));
    fs::remove_all(dir);
}

TEST_CASE("sweep writes one directory per grid point")
{
    const auto r = run_command("sweep", small("sweep_command = fig5\nsweep_M = 4, 8\nsweep_scheme = MRT\n"));
    std::vector<std::string> names;
    for (const auto &f : r.files)
        names.push_back(f.name);
    CHECK(std::find(names.begin(), names.end(), "M4_U4_N8_W0.25_MRT/fig5_mrt.csv") != names.end());
    CHECK(std::find(names.begin(), names.end(), "M8_U4_N8_W0.25_MRT/manifest.txt") != names.end());
}

TEST_CASE("command line errors")
{
    std::ostringstream out, err;
    const char *bad[] = {"fama-lab", "fig9"};
    CHECK(main_entry(2, const_cast<char **>(bad), out, err) != 0);
    const char *cfg[] = {"fama-lab", "fig5", "--scheme", "ZF", "--M", "3"};
    CHECK(main_entry(6, const_cast<char **>(cfg), out, err) == 2);
    CHECK(err.str().find("[M]") != std::string::npos);
}
