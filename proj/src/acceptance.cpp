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

#include "fama/acceptance.hpp"

#include "fama/analytic.hpp"
#include "fama/cli.hpp"
#include "fama/error.hpp"
#include "fama/experiments.hpp"
#include "fama/monte_carlo.hpp"
#include "fama/parallel.hpp"
#include "fama/precoding.hpp"
#include "fama/special_functions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace fama::acceptance {

namespace {

using analytic::BetaPrimeParams;

std::string fmt(const char *format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

// Collects sub-checks of one criterion into a pass flag and a detail string.
class Checks {
public:
    void expect(bool ok, const std::string &what)
    {
        passed_ = passed_ && ok;
        if (!detail_.empty())
            detail_ += "; ";
        detail_ += (ok ? "" : "FAILED ") + what;
    }

    bool passed() const noexcept { return passed_; }
    const std::string &detail() const noexcept { return detail_; }

private:
    bool passed_ = true;
    std::string detail_;
};

mc::ExperimentOptions experiment_options(const SuiteOptions &o)
{
    mc::ExperimentOptions e;
    e.workers = o.workers;
    return e;
}

SystemConfig base_config(Scheme scheme, const SuiteOptions &o)
{
    SystemConfig c;
    c.M = 8;
    c.U = 4;
    c.N = 8;
    c.scheme = scheme;
    c.seed = o.seed;
    return c;
}

// 1. finite-sum vs incomplete-Beta CDF.
void cross_form_identity(Checks &checks, const SuiteOptions &)
{
    const auto start = std::chrono::steady_clock::now();
    const auto grid = special::log_grid({1e-3, 1e3}, 200);
    double worst = 0.0;
    for (int a = 1; a <= 16; ++a)
        for (int b = 1; b <= 8; ++b)
            for (double g : grid) {
                const BetaPrimeParams p{a, b};
                worst = std::max(worst, std::abs(analytic::betaprime_cdf(g, p) - analytic::betaprime_cdf_finite_sum(g, p)));
            }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(worst <= 1e-10, "max |I - finite sum| = " + fmt("%.3e", worst) + " (<= 1e-10)");
    checks.expect(secs < 5.0, "runtime " + fmt("%.2f", secs) + " s (< 5 s)");
}

// 2. exact-law sampler goodness of fit.
void exact_law_fit(Checks &checks, const SuiteOptions &o)
{
    const auto start = std::chrono::steady_clock::now();
    for (Scheme s : {Scheme::MRT, Scheme::ZF}) {
        auto c = base_config(s, o);
        c.realizations = 1000000;
        const auto r = mc::run_cdf_experiment(c, mc::CdfMode::marginal, experiment_options(o));
        checks.expect(r.ks <= 0.003, to_string(s) + " KS vs Beta-prime(" + std::to_string(r.params.a) + "," +
                                         std::to_string(r.params.b) + ") = " + fmt("%.5f", r.ks) + " (<= 0.003)");
    }
    const double f83 = analytic::betaprime_cdf(1.0, {8, 3});
    const double f53 = analytic::betaprime_cdf(1.0, {5, 3});
    checks.expect(std::abs(f83 - 0.0546875) <= 1e-12, "F(1;8,3) = " + fmt("%.10f", f83) + " (0.0546875)");
    checks.expect(std::abs(f53 - 29.0 / 128.0) <= 1e-12, "F(1;5,3) = " + fmt("%.10f", f53) + " (29/128)");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(secs < 30.0, "runtime " + fmt("%.2f", secs) + " s (< 30 s)");
}

// 3. physical reference-port SIR fidelity.
void physical_fidelity(Checks &checks, const SuiteOptions &o)
{
    auto mrt = base_config(Scheme::MRT, o);
    mrt.realizations = 100000;
    const auto r_mrt = mc::run_cdf_experiment(mrt, mc::CdfMode::physical_reference, experiment_options(o));
    checks.expect(r_mrt.ks <= 0.03, "MRT physical reference KS vs Beta-prime(8,3) = " + fmt("%.4f", r_mrt.ks) + " (<= 0.03)");

    auto zf = base_config(Scheme::ZF, o);
    zf.realizations = 100000;
    const auto r_zf = mc::run_cdf_experiment(zf, mc::CdfMode::physical_reference, experiment_options(o));
    checks.expect(r_zf.ks <= 0.01, "ZF physical reference KS vs Beta-prime(5,3) = " + fmt("%.4f", r_zf.ks) + " (<= 0.01)");
}

// 4. ZF nulling and reference-gain laws.
void nulling_and_gain(Checks &checks, const SuiteOptions &o)
{
    const auto cfg = base_config(Scheme::ZF, o);
    SystemConfig ref = cfg;
    ref.N = 1;
    const auto geometry = make_geometry(ref);

    struct Partial {
        double worst_null = 0.0;
        double zf_sum = 0.0, zf_sq = 0.0, mrt_sum = 0.0, mrt_sq = 0.0;
        std::uint64_t n = 0;
    };
    const std::uint64_t draws = 100000;
    auto parts = run_chunks<Partial>(draws, 10000, o.workers, [&](const Chunk &chunk) {
        RngStream stream(o.seed, (std::uint64_t{40} << 32) | chunk.index);
        Partial p;
        ChannelSet ch;
        for (std::uint64_t r = 0; r < chunk.count; ++r) {
            generate_channel_set(stream, ref, geometry, ch);
            const auto H1 = reference_matrix(ch);
            PrecoderSet zf;
            try {
                zf = zf_precoders(H1);
            } catch (const SingularGramError &) {
                continue;
            }
            const auto mrt = mrt_precoders(H1);
            if (chunk.first + r < 10000) {
                for (int u = 0; u < ref.U; ++u)
                    for (int i = 0; i < ref.U; ++i)
                        if (i != u)
                            p.worst_null = std::max(p.worst_null, std::abs(H1.col(i).dot(zf.vectors.col(u))) / H1.col(i).norm());
            }
            const double gz = std::norm(H1.col(0).dot(zf.vectors.col(0)));
            const double gm = std::norm(H1.col(0).dot(mrt.vectors.col(0)));
            p.zf_sum += gz;
            p.zf_sq += gz * gz;
            p.mrt_sum += gm;
            p.mrt_sq += gm * gm;
            ++p.n;
        }
        return p;
    });
    Partial t;
    for (const auto &p : parts) {
        t.worst_null = std::max(t.worst_null, p.worst_null);
        t.zf_sum += p.zf_sum;
        t.zf_sq += p.zf_sq;
        t.mrt_sum += p.mrt_sum;
        t.mrt_sq += p.mrt_sq;
        t.n += p.n;
    }
    const double n = static_cast<double>(t.n);
    const auto mean_check = [&](double sum, double sq, double expected, const std::string &label) {
        const double mean = sum / n;
        const double sd = std::sqrt(std::max(0.0, (sq - n * mean * mean) / (n - 1.0)));
        const double tol = 3.0 * sd / std::sqrt(n);
        checks.expect(std::abs(mean - expected) <= tol, label + " mean gain " + fmt("%.4f", mean) + " vs " +
                                                           fmt("%.0f", expected) + " (3 sigma = " + fmt("%.4f", tol) + ")");
    };
    checks.expect(t.worst_null <= 1e-10, "ZF nulling residual " + fmt("%.2e", t.worst_null) + " over 1e4 draws (<= 1e-10)");
    mean_check(t.zf_sum, t.zf_sq, cfg.M - cfg.U + 1, "ZF");
    mean_check(t.mrt_sum, t.mrt_sq, cfg.M, "MRT");
}

// 5. correlation model.
void correlation_model(Checks &checks, const SuiteOptions &o)
{
    const std::vector<double> ones{1.0, 1.0};
    const auto sur = mc::surrogate_gain_correlation(ones, 8, 3, 1000000, o.seed, experiment_options(o));
    checks.expect(std::abs(sur.rho(0, 1) - 8.0 / 11.0) <= 0.01,
                  "surrogate corr at mu=1: " + fmt("%.5f", sur.rho(0, 1)) + " vs 0.72727 (+-0.01)");

    auto c = base_config(Scheme::MRT, o);
    c.W = 4.0;
    c.realizations = 1000000;
    mc::CorrelationOptions co;
    co.surrogate_realizations = 10000;
    const auto r = mc::run_correlation_experiment(c, co, experiment_options(o));
    checks.expect(r.max_deviation <= 0.1,
                  "physical MRT (W=4, ports >= 2) max |rho - model| = " + fmt("%.4f", r.max_deviation) + " (<= 0.1)");
}

// 6. outage sandwich and the two spacing regimes.
void outage_sandwich(Checks &checks, const SuiteOptions &o)
{
    const auto start = std::chrono::steady_clock::now();
    for (int M : {4, 8})
        for (int N : {2, 8})
            for (double W : {0.25, 4.0}) {
                auto c = base_config(Scheme::MRT, o);
                c.M = M;
                c.N = N;
                c.W = W;
                c.realizations = 100000;
                mc::OutageOptions oo;
                oo.with_iid_benchmark = false;
                const auto r = mc::run_outage_experiment(c, mc::default_sir_grid(), oo, experiment_options(o));
                double sandwich = 0.0; // worst excursion outside [lower - 2CI, upper + 2CI]
                double regime = 0.0;   // worst |P - reference| on the band
                for (std::size_t i = 0; i < r.gamma.size(); ++i) {
                    const auto &e = r.envelope[i];
                    const double p = r.correlated[i];
                    const double ci = r.correlated_ci[i];
                    sandwich = std::max({sandwich, (e.lower - 2.0 * ci) - p, p - (e.upper + 2.0 * ci)});
                    // Band on F^N for both regimes.
                    const double reference = W > 1.0 ? e.iid_benchmark : e.single_port;
                    if (e.iid_benchmark >= 0.05 && e.iid_benchmark <= 0.95)
                        regime = std::max(regime, std::abs(p - reference));
                }
                const std::string tag = "M=" + std::to_string(M) + " N=" + std::to_string(N) + " W=" + fmt("%g", W);
                checks.expect(sandwich <= 0.0, tag + " sandwich excursion " + fmt("%.2e", std::max(0.0, sandwich)));
                checks.expect(regime <= 0.05,
                              tag + (W > 1.0 ? " |P - F^N|" : " |P - F|") + " max " + fmt("%.4f", regime) + " (<= 0.05)");
            }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(secs < 600.0, "runtime " + fmt("%.1f", secs) + " s (< 600 s)");
}

// 7. small-threshold asymptote.
void small_gamma(Checks &checks, const SuiteOptions &)
{
    struct Case {
        BetaPrimeParams p;
        double C;
    };
    for (const Case cs : {Case{{8, 3}, 45.0}, Case{{5, 3}, 21.0}}) {
        const std::string tag = "(" + std::to_string(cs.p.a) + "," + std::to_string(cs.p.b) + ")";
        const double prefactor = analytic::asymptote_small_gamma(1.0, cs.p);
        checks.expect(std::abs(prefactor - cs.C) <= 1e-9 * cs.C, tag + " prefactor " + fmt("%.6f", prefactor));
        double previous = 0.0;
        bool monotone = true;
        double last = 0.0;
        for (double g : {0.02, 0.01, 0.005, 0.0025}) {
            const double ratio = analytic::betaprime_cdf(g, cs.p) / (cs.C * std::pow(g, cs.p.a));
            monotone = monotone && ratio > previous && std::abs(1.0 - ratio) < std::abs(1.0 - previous);
            previous = ratio;
            last = ratio;
        }
        checks.expect(last >= 0.95 && last <= 1.0, tag + " ratio at 0.0025 = " + fmt("%.5f", last) + " in [0.95, 1]");
        checks.expect(monotone, tag + " ratio monotone toward 1");
    }
}

// 8. large-SIR tail.
void large_sir_tail(Checks &checks, const SuiteOptions &o)
{
    for (const BetaPrimeParams p : {BetaPrimeParams{8, 3}, BetaPrimeParams{5, 3}}) {
        const std::string tag = "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
        for (const auto &[g, tol] : {std::pair{100.0, 0.10}, std::pair{1000.0, 0.03}}) {
            const double ratio = analytic::betaprime_sf(g, p) / analytic::asymptote_tail(g, p);
            checks.expect(std::abs(ratio - 1.0) <= tol,
                          tag + " tail ratio at " + fmt("%g", g) + " = " + fmt("%.5f", ratio) + " (+-" + fmt("%g", tol) + ")");
        }
    }
    const BetaPrimeParams p{8, 3};
    const auto cdf = mc::sample_marginal_cdf(p, {30.0}, 10000000, o.seed, mc::StreamTag::marginal_tail, experiment_options(o));
    const double mc_tail = 1.0 - cdf.value_at(0);
    const double exact = analytic::betaprime_sf(30.0, p);
    const double rel = std::abs(mc_tail - exact) / exact;
    checks.expect(rel <= 0.05, "MC tail at 30 (n=1e7) " + fmt("%.6e", mc_tail) + " vs " + fmt("%.6e", exact) +
                                   ", rel err " + fmt("%.4f", rel) + " (<= 0.05)");
}

// 9. large-N exponential regime.
void large_n_regime(Checks &checks, const SuiteOptions &)
{
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        const auto e = analytic::outage_envelope_from_cdf(1.0 - eps, 8);
        const double gap = std::abs(e.large_n_approx - e.iid_benchmark);
        const double bound = 8.0 * eps * eps / 2.0 + 1e-12;
        checks.expect(gap <= bound, "eps=" + fmt("%g", eps) + " gap " + fmt("%.3e", gap) + " <= " + fmt("%.3e", bound));
    }
}

// 10. reproducibility and scale invariances.
void reproducibility(Checks &checks, const SuiteOptions &o)
{
    cli::RunSettings s;
    s.system = base_config(Scheme::MRT, o);
    s.system.W = 4.0;
    s.system.realizations = 30000;
    s.explicit_keys.insert("realizations");
    for (const std::string command : {"fig3", "fig4"}) {
        std::vector<std::string> reference;
        bool identical = true;
        for (std::size_t workers : {1u, 2u, 8u}) {
            mc::ExperimentOptions eo;
            eo.workers = workers;
            eo.chunk_size = 2500;
            const auto r = cli::run_command(command, s, eo);
            std::vector<std::string> contents;
            for (const auto &f : r.files)
                contents.push_back(f.contents);
            if (reference.empty())
                reference = contents;
            else
                identical = identical && contents == reference;
        }
        checks.expect(identical, command + " CSVs byte-identical for 1/2/8 workers");
    }

    auto base = base_config(Scheme::ZF, o);
    base.W = 0.5;
    const auto geometry = make_geometry(base);
    double worst_beta = 0.0;
    double worst_power = 0.0;
    for (std::uint64_t r = 0; r < 200; ++r) {
        const auto sirs_for = [&](const SystemConfig &c) {
            RngStream stream(o.seed, (std::uint64_t{41} << 32) | r);
            const auto ch = generate_channel_set(stream, c, geometry);
            const auto pre = make_precoders(c.scheme, reference_matrix(ch));
            return mc::physical_sir_per_port(ch, pre, c.power_vector());
        };
        const auto rel = [](const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
            double w = 0.0;
            for (Eigen::Index i = 0; i < a.size(); ++i) {
                if (std::isinf(a(i)) || std::isinf(b(i))) {
                    if (a(i) != b(i))
                        return 1.0;
                    continue;
                }
                w = std::max(w, std::abs(a(i) - b(i)) / std::abs(a(i)));
            }
            return w;
        };
        for (Scheme s2 : {Scheme::MRT, Scheme::ZF}) {
            auto c = base;
            c.scheme = s2;
            const auto ref = sirs_for(c);
            auto cb = c;
            cb.beta.assign(static_cast<std::size_t>(c.U), 3.7);
            worst_beta = std::max(worst_beta, rel(ref, sirs_for(cb)));
            auto cp = c;
            cp.powers.assign(static_cast<std::size_t>(c.U), 0.042);
            worst_power = std::max(worst_power, rel(ref, sirs_for(cp)));
        }
    }
    checks.expect(worst_beta <= 1e-12, "beta scaling max rel change " + fmt("%.2e", worst_beta) + " (<= 1e-12)");
    checks.expect(worst_power <= 1e-12, "power scaling max rel change " + fmt("%.2e", worst_power) + " (<= 1e-12)");
}

struct Entry {
    const char *name;
    std::function<void(Checks &, const SuiteOptions &)> run;
};

const std::vector<Entry> &registry()
{
    static const std::vector<Entry> entries = {
        {"analytic cross-form identity", cross_form_identity},
        {"exact-law goodness of fit", exact_law_fit},
        {"physical-model fidelity", physical_fidelity},
        {"ZF nulling and gain laws", nulling_and_gain},
        {"correlation model", correlation_model},
        {"outage sandwich and regimes", outage_sandwich},
        {"small-threshold asymptote", small_gamma},
        {"large-SIR tail", large_sir_tail},
        {"large-N regime", large_n_regime},
        {"reproducibility and invariances", reproducibility},
    };
    return entries;
}

} // namespace

CriterionResult run_criterion(int id, const SuiteOptions &options)
{
    const auto &entries = registry();
    if (id < 1 || id > static_cast<int>(entries.size()))
        throw DomainError("unknown acceptance criterion " + std::to_string(id));
    CriterionResult result;
    result.id = id;
    result.name = entries[static_cast<std::size_t>(id - 1)].name;
    const auto start = std::chrono::steady_clock::now();
    Checks checks;
    try {
        entries[static_cast<std::size_t>(id - 1)].run(checks, options);
        result.passed = checks.passed();
        result.detail = checks.detail();
    } catch (const std::exception &e) {
        result.passed = false;
        result.detail = checks.detail() + (checks.detail().empty() ? "" : "; ") + "error: " + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions &options)
{
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
            continue;
        results.push_back(run_criterion(id, options));
    }
    return results;
}

std::string format_line(const CriterionResult &r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  #" << r.id << " " << r.name << "  (" << fmt("%.1f", r.seconds) << " s)  "
       << r.detail;
    return os.str();
}

std::string format_table(const std::vector<CriterionResult> &results)
{
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto &r : results) {
        os << format_line(r) << '\n';
        passed += r.passed ? 1 : 0;
    }
    os << passed << "/" << results.size() << " criteria passed\n";
    return os.str();
}

} // namespace fama::acceptance
