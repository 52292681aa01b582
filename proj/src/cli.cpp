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

#include "fama/acceptance.hpp"
#include "fama/analytic.hpp"
#include "fama/error.hpp"
#include "fama/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fama::cli {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(trim(item));
    return out;
}

template <typename T>
T parse_number(const std::string &key, const std::string &text)
{
    T value{};
    const auto *begin = text.data();
    const auto *end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(key, "cannot parse '" + text + "' as a number");
    return value;
}

int parse_int(const std::string &key, const std::string &text) { return parse_number<int>(key, text); }

double parse_real(const std::string &key, const std::string &text)
{
    const double v = parse_number<double>(key, text);
    if (!std::isfinite(v))
        throw ConfigError(key, "value must be finite");
    return v;
}

bool parse_bool(const std::string &key, const std::string &text)
{
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes")
        return true;
    if (t == "false" || t == "0" || t == "no")
        return false;
    throw ConfigError(key, "expected true or false, got '" + text + "'");
}

template <typename T, typename F>
std::vector<T> parse_list(const std::string &key, const std::string &text, F &&one)
{
    std::vector<T> out;
    if (trim(text).empty())
        return out;
    for (const auto &item : split_list(text))
        out.push_back(one(key, item));
    return out;
}

void apply(RunSettings &s, const std::string &key, const std::string &value)
{
    auto &c = s.system;
    if (key == "M")
        c.M = parse_int(key, value);
    else if (key == "U")
        c.U = parse_int(key, value);
    else if (key == "N")
        c.N = parse_int(key, value);
    else if (key == "W")
        c.W = parse_real(key, value);
    else if (key == "scheme")
        c.scheme = parse_scheme(value);
    else if (key == "beta")
        c.beta = parse_list<double>(key, value, parse_real);
    else if (key == "powers")
        c.powers = parse_list<double>(key, value, parse_real);
    else if (key == "reference_mode")
        c.reference_mode = parse_reference_mode(value);
    else if (key == "include_reference_in_selection")
        c.include_reference_in_selection = parse_bool(key, value);
    else if (key == "seed")
        c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "realizations")
        c.realizations = parse_number<std::uint64_t>(key, value);
    else if (key == "chunk_size")
        s.chunk_size = parse_number<std::uint64_t>(key, value);
    else if (key == "sweep_M")
        s.sweep.M = parse_list<int>(key, value, parse_int);
    else if (key == "sweep_U")
        s.sweep.U = parse_list<int>(key, value, parse_int);
    else if (key == "sweep_N")
        s.sweep.N = parse_list<int>(key, value, parse_int);
    else if (key == "sweep_W")
        s.sweep.W = parse_list<double>(key, value, parse_real);
    else if (key == "sweep_scheme")
        s.sweep.scheme =
            parse_list<Scheme>(key, value, [](const std::string &, const std::string &v) { return parse_scheme(v); });
    else if (key == "sweep_command")
        s.sweep.command = trim(value);
    else
        throw ConfigError(key, "unknown configuration key");
    s.explicit_keys.insert(key);
}

void finish(RunSettings &s)
{
    if (s.system.realizations == 0)
        throw ConfigError("realizations", "must be positive");
    if (s.chunk_size == 0)
        throw ConfigError("chunk_size", "must be positive");
    const auto &cmd = s.sweep.command;
    if (cmd != "fig2" && cmd != "fig3" && cmd != "fig4" && cmd != "fig5")
        throw ConfigError("sweep_command", "must be one of fig2, fig3, fig4, fig5");
    s.system.validate();
}

std::string join(const std::vector<double> &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + format_number(v[i]);
    return out;
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

void echo_config(RunManifest &m, const SystemConfig &c, std::uint64_t chunk_size)
{
    m.section("config");
    m.set_count("M", static_cast<std::uint64_t>(c.M));
    m.set_count("U", static_cast<std::uint64_t>(c.U));
    m.set_count("N", static_cast<std::uint64_t>(c.N));
    m.set("W", c.W);
    m.set("scheme", to_string(c.scheme));
    m.set("beta", join(c.beta));
    m.set("powers", join(c.powers));
    m.set("reference_mode", to_string(c.reference_mode));
    m.set("include_reference_in_selection", c.include_reference_in_selection ? "true" : "false");
    m.set_count("seed", c.seed);
    m.set_count("realizations", c.realizations);
    m.set_count("chunk_size", chunk_size);
}

void record_counters(RunManifest &m, const std::string &prefix, const mc::RunCounters &c)
{
    m.set_count(prefix + ".realizations", c.realizations);
    m.set_count(prefix + ".resampled_singular", c.resampled_singular);
    m.set_count(prefix + ".infinite_sir", c.infinite_sir);
    m.set_count(prefix + ".dropped_rows", c.dropped_rows);
}

void add_empirical(CurveTable &t, const mc::EmpiricalCdf &cdf, const std::string &curve, bool survival = false)
{
    const auto v = cdf.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double p = survival ? 1.0 - v[i] : v[i];
        const double hw = mc::binomial_half_width(p, cdf.sample_size());
        t.add(cdf.grid()[i], p, std::max(0.0, p - hw), std::min(1.0, p + hw), curve);
    }
}

void add_binomial(CurveTable &t, const std::vector<double> &gamma, const std::vector<double> &p,
                  const std::vector<double> &hw, const std::string &curve)
{
    for (std::size_t i = 0; i < gamma.size(); ++i)
        t.add(gamma[i], p[i], std::max(0.0, p[i] - hw[i]), std::min(1.0, p[i] + hw[i]), curve);
}

std::pair<double, double> fisher_interval(double r, std::uint64_t n)
{
    if (n <= 3 || !(std::abs(r) < 1.0))
        return {r, r};
    const double z = std::atanh(r);
    const double se = 1.959963984540054 / std::sqrt(static_cast<double>(n - 3));
    return {std::tanh(z - se), std::tanh(z + se)};
}

// 121 points, 20 per decade, on [1e-3, 1e3]; i = 100 is exactly 100.
std::vector<double> fig5_grid()
{
    std::vector<double> g;
    for (int i = 0; i <= 120; ++i)
        g.push_back(std::pow(10.0, (i - 60) / 20.0));
    return g;
}

SystemConfig with_scheme(const SystemConfig &base, Scheme s)
{
    SystemConfig c = base;
    c.scheme = s;
    c.validate();
    return c;
}

CommandResult fig2(const RunSettings &s, const mc::ExperimentOptions &o)
{
    CommandResult r;
    std::ostringstream report;
    for (Scheme scheme : {Scheme::MRT, Scheme::ZF}) {
        const auto c = with_scheme(s.system, scheme);
        const std::string tag = lower(to_string(scheme));
        auto cm = c;
        cm.realizations = s.marginal_realizations();
        const auto marginal = mc::run_cdf_experiment(cm, mc::CdfMode::marginal, o);
        const auto physical = mc::run_cdf_experiment(c, mc::CdfMode::physical_reference, o);
        CurveTable t;
        const auto &grid = marginal.empirical.grid();
        for (std::size_t i = 0; i < grid.size(); ++i)
            t.add_exact(grid[i], marginal.analytic_cdf[i], "analytic_incomplete_beta");
        for (std::size_t i = 0; i < grid.size(); ++i)
            t.add_exact(grid[i], marginal.analytic_finite_sum[i], "analytic_finite_sum");
        add_empirical(t, marginal.empirical, "marginal_mc");
        add_empirical(t, physical.empirical, "physical_reference_mc");
        r.files.push_back({"fig2_" + tag + ".csv", t.to_csv()});
        r.manifest.set(tag + ".params", std::to_string(marginal.params.a) + "," + std::to_string(marginal.params.b));
        record_counters(r.manifest, tag + ".marginal_mc", marginal.counters);
        record_counters(r.manifest, tag + ".physical_reference_mc", physical.counters);
        report << to_string(scheme) << ": KS marginal " << format_number(marginal.ks) << ", KS physical_reference "
               << format_number(physical.ks) << '\n';
    }
    r.report = report.str();
    return r;
}

CommandResult fig3(const RunSettings &s, const mc::ExperimentOptions &o)
{
    CommandResult r;
    const auto &c = s.system;
    const auto res = mc::run_correlation_experiment(c, {}, o);
    const auto geometry = make_geometry(c);
    const auto distance = [&](std::size_t k, std::size_t l) {
        return std::abs(geometry.displacements[k] - geometry.displacements[l]);
    };
    PairTable t;
    const auto emit = [&](const mc::CorrEstimate &est, const Eigen::MatrixXd &overlay, const std::string &sim,
                          const std::string &model) {
        const auto &p = est.ports;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                const double v = est.rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                const auto [lo, hi] = fisher_interval(v, est.samples);
                t.add(p[i] + 1, p[j] + 1, distance(p[i], p[j]), v, lo, hi, sim);
            }
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                const double v = overlay(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                t.add(p[i] + 1, p[j] + 1, distance(p[i], p[j]), v, v, v, model);
            }
    };
    emit(res.physical, res.rho_x_model, "simulated_rho_x", "model_rho_x");
    emit(res.surrogate, res.rho_u_model, "surrogate_rho_u", "model_rho_u");
    r.files.push_back({"fig3_" + lower(to_string(c.scheme)) + ".csv", t.to_csv()});
    r.manifest.set("port_set", res.port_set_note);
    r.manifest.set("reference_included", res.reference_included ? "true" : "false");
    r.manifest.set_count("surrogate.samples", res.surrogate.samples);
    record_counters(r.manifest, "simulated_rho_x", res.counters);
    std::ostringstream report;
    report << to_string(c.scheme) << ": max |simulated - model rho_x| " << format_number(res.max_deviation)
           << ", max |surrogate - model rho_u| " << format_number(res.surrogate_max_deviation) << '\n';
    r.report = report.str();
    return r;
}

CommandResult fig4(const RunSettings &s, const mc::ExperimentOptions &o)
{
    CommandResult r;
    const auto &c = s.system;
    const auto res = mc::run_outage_experiment(c, mc::default_sir_grid(), {}, o);
    CurveTable t;
    add_binomial(t, res.gamma, res.correlated, res.correlated_ci, "correlated_mc");
    add_binomial(t, res.gamma, res.iid, res.iid_ci, "iid_mc");
    const auto exact = [&](const std::string &curve, auto field) {
        for (std::size_t i = 0; i < res.gamma.size(); ++i)
            t.add_exact(res.gamma[i], field(res.envelope[i]), curve);
    };
    exact("single_port_upper", [](const analytic::OutageEnvelope &e) { return e.upper; });
    exact("lower_bound", [](const analytic::OutageEnvelope &e) { return e.lower; });
    exact("iid_analytic", [](const analytic::OutageEnvelope &e) { return e.iid_benchmark; });
    exact("large_n_approx", [](const analytic::OutageEnvelope &e) { return e.large_n_approx; });
    for (std::size_t i = 0; i < res.gamma.size(); ++i)
        t.add_exact(res.gamma[i], res.marginal_upper[i], "marginal_upper_mc");
    for (std::size_t i = 0; i < res.gamma.size(); ++i)
        t.add_exact(res.gamma[i], res.marginal_lower[i], "marginal_lower_mc");
    r.files.push_back({"fig4_" + lower(to_string(c.scheme)) + ".csv", t.to_csv()});
    std::string sel;
    for (std::size_t k : res.selection)
        sel += (sel.empty() ? "" : ",") + std::to_string(k + 1);
    r.manifest.set("selection_ports", sel);
    r.manifest.set_count("diversity_order",
                         static_cast<std::uint64_t>(analytic::diversity_orders(c.scheme, c.M, c.U, c.N)));
    record_counters(r.manifest, "correlated_mc", res.counters);
    r.manifest.set_count("iid_mc.realizations", res.n);
    return r;
}

CommandResult fig5(const RunSettings &s, const mc::ExperimentOptions &o)
{
    CommandResult r;
    const auto grid = fig5_grid();
    for (Scheme scheme : {Scheme::MRT, Scheme::ZF}) {
        const auto c = with_scheme(s.system, scheme);
        const auto p = analytic::sir_params(scheme, c.M, c.U);
        const std::string tag = lower(to_string(scheme));
        CurveTable t;
        for (double g : grid)
            t.add_exact(g, analytic::betaprime_cdf(g, p), "analytic_cdf");
        for (double g : grid)
            t.add_exact(g, analytic::asymptote_small_gamma(g, p), "small_gamma_asymptote");
        for (double g : grid)
            t.add_exact(g, analytic::betaprime_sf(g, p), "tail_sf");
        for (double g : grid)
            t.add_exact(g, analytic::asymptote_tail(g, p), "tail_asymptote");
        for (double g : grid)
            if (g < 1.0)
                t.add_exact(g, analytic::asymptote_large_m(g, scheme, c.M, c.U), "large_m_asymptote");
        const auto n = s.marginal_realizations();
        const auto cdf = mc::sample_marginal_cdf(p, grid, n, c.seed, mc::StreamTag::marginal_tail, o);
        add_empirical(t, cdf, "marginal_mc_sf", true);
        r.files.push_back({"fig5_" + tag + ".csv", t.to_csv()});
        r.manifest.set(tag + ".params", std::to_string(p.a) + "," + std::to_string(p.b));
        r.manifest.set_count(tag + ".marginal_mc_sf.realizations", n);
    }
    return r;
}

CommandResult validate(const RunSettings &s, const mc::ExperimentOptions &o)
{
    acceptance::SuiteOptions so;
    so.workers = o.workers;
    if (s.is_explicit("seed"))
        so.seed = s.system.seed;
    const auto results = acceptance::run_suite(so);
    CommandResult r;
    r.report = acceptance::format_table(results);
    r.success = std::all_of(results.begin(), results.end(), [](const auto &x) { return x.passed; });
    r.files.push_back({"validate.txt", r.report});
    r.manifest.set_count("acceptance.seed", so.seed);
    for (const auto &x : results)
        r.manifest.set("criterion." + std::to_string(x.id), x.passed ? "pass" : "fail");
    return r;
}

CommandResult single(const std::string &name, const RunSettings &s, const mc::ExperimentOptions &o);

std::string point_name(const SystemConfig &c)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, "M%d_U%d_N%d_W%s_%s", c.M, c.U, c.N, format_number(c.W).c_str(),
                  to_string(c.scheme).c_str());
    return buf;
}

CommandResult sweep(const RunSettings &s, const mc::ExperimentOptions &o)
{
    const auto &g = s.sweep;
    const auto or_base = [](auto axis, auto base) { return axis.empty() ? decltype(axis){base} : axis; };
    const auto Ms = or_base(g.M, s.system.M);
    const auto Us = or_base(g.U, s.system.U);
    const auto Ns = or_base(g.N, s.system.N);
    const auto Ws = or_base(g.W, s.system.W);
    const auto schemes = or_base(g.scheme, s.system.scheme);

    std::vector<RunSettings> points;
    for (int M : Ms)
        for (int U : Us)
            for (int N : Ns)
                for (double W : Ws)
                    for (Scheme scheme : schemes) {
                        RunSettings p = s;
                        p.system.M = M;
                        p.system.U = U;
                        p.system.N = N;
                        p.system.W = W;
                        p.system.scheme = scheme;
                        p.sweep = {};
                        p.system.validate();
                        points.push_back(std::move(p));
                    }

    CommandResult r;
    std::string names;
    for (const auto &p : points) {
        const std::string dir = point_name(p.system);
        auto sub = single(g.command, p, o);
        for (auto &f : sub.files)
            r.files.push_back({dir + "/" + f.name, std::move(f.contents)});
        r.files.push_back({dir + "/manifest.txt", sub.manifest.to_text()});
        r.report += dir + ": " + (sub.report.empty() ? "done\n" : sub.report);
        names += (names.empty() ? "" : ",") + dir;
    }
    r.manifest.set("sweep.command", g.command);
    r.manifest.set("sweep.points", names);
    return r;
}

CommandResult single(const std::string &name, const RunSettings &in, const mc::ExperimentOptions &o)
{
    RunSettings s = in;
    // The nulled ZF reference port makes member-mode correlated outage zero.
    if (name == "fig4" && s.system.scheme == Scheme::ZF && !s.is_explicit("reference_mode"))
        s.system.reference_mode = ReferenceMode::external;

    const auto start = std::chrono::steady_clock::now();
    CommandResult r;
    if (name == "fig2")
        r = fig2(s, o);
    else if (name == "fig3")
        r = fig3(s, o);
    else if (name == "fig4")
        r = fig4(s, o);
    else if (name == "fig5")
        r = fig5(s, o);
    else if (name == "validate")
        r = validate(s, o);
    else if (name == "sweep")
        r = sweep(s, o);
    else
        throw ConfigError("command", "unknown command '" + name + "'");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    RunManifest m;
    echo_config(m, s.system, o.chunk_size);
    m.section("run");
    m.set("command", name);
    m.set("version", kVersion);
    m.set_count("marginal_realizations", s.marginal_realizations());
    for (auto &e : r.manifest.entries)
        m.entries.push_back(std::move(e));
    std::string files;
    for (const auto &f : r.files)
        files += (files.empty() ? "" : ",") + f.name;
    m.set("files", files);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    m.set("wall_clock_seconds", buf);
    r.manifest = std::move(m);
    return r;
}

} // namespace

RunSettings parse_settings_text(const std::string &text, const std::map<std::string, std::string> &overrides)
{
    RunSettings s;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool in_run_section = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto t = trim(line);
        if (t.empty())
            continue;
        if (t.front() == '[') {
            in_run_section = t == "[run]";
            continue;
        }
        if (in_run_section)
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(t, "line " + std::to_string(lineno) + ": expected key = value");
        apply(s, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    for (const auto &[key, value] : overrides)
        apply(s, key, value);
    finish(s);
    return s;
}

RunSettings parse_settings(const std::optional<fs::path> &file, const std::map<std::string, std::string> &overrides)
{
    std::string text;
    if (file) {
        std::ifstream in(*file);
        if (!in)
            throw ConfigError("config", "cannot read '" + file->string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_settings_text(text, overrides);
}

SystemConfig parse_config(const std::optional<fs::path> &file, const std::map<std::string, std::string> &overrides)
{
    return parse_settings(file, overrides).system;
}

std::string format_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char *CurveTable::header() { return "gamma,gamma_db,value,ci_low,ci_high,curve_id"; }

void CurveTable::add(double gamma, double value, double ci_low, double ci_high, const std::string &curve)
{
    rows_.push_back({gamma, value, ci_low, ci_high, curve});
}

std::string CurveTable::to_csv() const
{
    std::string out = std::string(header()) + "\n";
    for (const auto &r : rows_)
        out += format_number(r.gamma) + "," + format_number(10.0 * std::log10(r.gamma)) + "," + format_number(r.value) +
               "," + format_number(r.ci_low) + "," + format_number(r.ci_high) + "," + r.curve + "\n";
    return out;
}

const char *PairTable::header() { return "port_k,port_l,distance_wl,value,ci_low,ci_high,curve_id"; }

void PairTable::add(std::size_t port_k, std::size_t port_l, double distance, double value, double ci_low,
                    double ci_high, const std::string &curve)
{
    rows_.push_back({port_k, port_l, distance, value, ci_low, ci_high, curve});
}

std::string PairTable::to_csv() const
{
    std::string out = std::string(header()) + "\n";
    for (const auto &r : rows_)
        out += std::to_string(r.k) + "," + std::to_string(r.l) + "," + format_number(r.distance) + "," +
               format_number(r.value) + "," + format_number(r.ci_low) + "," + format_number(r.ci_high) + "," +
               r.curve + "\n";
    return out;
}

void RunManifest::section(const std::string &name) { entries.emplace_back("[" + name + "]", ""); }

void RunManifest::set(const std::string &key, const std::string &value)
{
    for (auto &e : entries)
        if (e.first == key) {
            e.second = value;
            return;
        }
    entries.emplace_back(key, value);
}

std::string RunManifest::to_text() const
{
    std::string out;
    for (const auto &[k, v] : entries)
        out += k.front() == '[' ? k + "\n" : k + " = " + v + "\n";
    return out;
}

std::vector<fs::path> write_outputs(CommandResult &result, const fs::path &destination)
{
    std::vector<fs::path> written;
    try {
        fs::create_directories(destination);
        std::vector<OutputFile> all = result.files;
        all.push_back({"manifest.txt", result.manifest.to_text()});
        for (const auto &f : all) {
            const fs::path path = destination / f.name;
            fs::create_directories(path.parent_path());
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open '" + path.string() + "' for writing");
            written.push_back(path);
            out << f.contents;
            out.close();
            if (!out)
                throw std::runtime_error("write failed for '" + path.string() + "'");
        }
    } catch (...) {
        std::error_code ec;
        for (const auto &p : written)
            fs::remove(p, ec);
        throw;
    }
    return written;
}

CommandResult run_command(const std::string &name, const RunSettings &settings, const mc::ExperimentOptions &options)
{
    return single(name, settings, options);
}

int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"fama-lab: fluid-antenna multiple access SIR statistics", "fama-lab"};
    app.set_version_flag("--version", std::string(kVersion));
    std::string command;
    std::string config_path;
    std::string out_dir = ".";
    std::map<std::string, std::string> overrides;
    std::string seed, realizations, scheme, M, U, N, W, reference_mode;
    app.add_option("command", command, "fig2 | fig3 | fig4 | fig5 | validate | sweep")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "validate", "sweep"}));
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--realizations", realizations, "Monte-Carlo realizations");
    app.add_option("--scheme", scheme, "MRT or ZF");
    app.add_option("--M", M, "BS antennas");
    app.add_option("--U", U, "users");
    app.add_option("--N", N, "ports per user");
    app.add_option("--W", W, "aperture in wavelengths");
    app.add_option("--reference-mode", reference_mode, "member or external");
    app.add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    const std::pair<const char *, std::string *> flags[] = {
        {"seed", &seed}, {"realizations", &realizations}, {"scheme", &scheme}, {"M", &M},
        {"U", &U},       {"N", &N},                       {"W", &W},           {"reference_mode", &reference_mode},
    };
    for (const auto &[key, value] : flags)
        if (!value->empty())
            overrides[key] = *value;

    try {
        std::optional<fs::path> file;
        if (!config_path.empty())
            file = config_path;
        const auto settings = parse_settings(file, overrides);
        mc::ExperimentOptions options;
        options.chunk_size = settings.chunk_size;
        options.workers = default_worker_count();
        auto result = run_command(command, settings, options);
        const auto files = write_outputs(result, out_dir);
        out << result.report;
        for (const auto &f : files)
            out << "wrote " << f.string() << '\n';
        return result.success ? 0 : 1;
    } catch (const ConfigError &e) {
        err << "fama-lab: configuration error [" << e.key() << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "fama-lab: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fama::cli
