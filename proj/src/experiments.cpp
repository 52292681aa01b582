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

#include "fama/experiments.hpp"

#include "fama/error.hpp"
#include "fama/parallel.hpp"
#include "fama/precoding.hpp"

#include <algorithm>
#include <cmath>

namespace fama::mc {

void RunCounters::merge(const RunCounters &other)
{
    realizations += other.realizations;
    resampled_singular += other.resampled_singular;
    infinite_sir += other.infinite_sir;
    dropped_rows += other.dropped_rows;
}

std::uint64_t stream_id(StreamTag tag, std::uint64_t chunk)
{
    return (static_cast<std::uint64_t>(tag) << 32) | (chunk & 0xffffffffu);
}

std::string to_string(CdfMode mode) { return mode == CdfMode::marginal ? "marginal" : "physical_reference"; }

namespace {

constexpr int kMaxResample = 1000;

// One channel realization plus its precoders; singular ZF draws are
// discarded and redrawn from the same stream.
class RealizationDrawer {
public:
    RealizationDrawer(const SystemConfig &config, PortGeometry geometry)
        : config_(config), geometry_(std::move(geometry))
    {
    }

    void draw(RngStream &stream, RunCounters &counters)
    {
        for (int attempt = 0; attempt < kMaxResample; ++attempt) {
            generate_channel_set(stream, config_, geometry_, channels_);
            try {
                precoders_ = make_precoders(config_.scheme, reference_matrix(channels_));
                ++counters.realizations;
                return;
            } catch (const SingularGramError &) {
                ++counters.resampled_singular;
            }
        }
        throw SingularGramError("too many consecutive singular Gram draws", 0.0);
    }

    const ChannelSet &channels() const noexcept { return channels_; }
    const PrecoderSet &precoders() const noexcept { return precoders_; }
    const PortGeometry &geometry() const noexcept { return geometry_; }

private:
    const SystemConfig &config_;
    PortGeometry geometry_;
    ChannelSet channels_;
    PrecoderSet precoders_;
};

struct CdfChunk {
    EmpiricalCdf cdf;
    RunCounters counters;
};

SystemConfig reference_only(const SystemConfig &config)
{
    SystemConfig c = config;
    c.N = 1;
    c.reference_mode = ReferenceMode::member;
    c.include_reference_in_selection = true;
    return c;
}

std::vector<std::size_t> estimated_ports(const SystemConfig &config, bool include_reference, std::string &note)
{
    std::vector<std::size_t> ports;
    const bool external = config.reference_mode == ReferenceMode::external;
    const std::size_t locations = static_cast<std::size_t>(external ? config.N + 1 : config.N);
    bool with_ref = include_reference && !external;
    if (with_ref && config.scheme == Scheme::ZF) {
        with_ref = false;
        note = "reference port excluded: ZF nulls it exactly (unbounded SIR)";
    } else if (external) {
        note = "external reference: estimated over the N selectable ports";
    } else if (with_ref) {
        note = "reference port included";
    } else {
        note = "reference port excluded";
    }
    for (std::size_t k = with_ref ? 0 : 1; k < locations; ++k)
        ports.push_back(k);
    return ports;
}

} // namespace

EmpiricalCdf sample_marginal_cdf(analytic::BetaPrimeParams params, std::vector<double> grid, std::uint64_t n,
                                 std::uint64_t seed, StreamTag tag, const ExperimentOptions &options)
{
    params.validate();
    auto chunks = run_chunks<EmpiricalCdf>(n, options.chunk_size, options.workers, [&](const Chunk &chunk) {
        RngStream stream(seed, stream_id(tag, chunk.index));
        EmpiricalCdf cdf(grid);
        for (std::uint64_t r = 0; r < chunk.count; ++r)
            cdf.add(marginal_model_sample(stream, params));
        return cdf;
    });
    EmpiricalCdf total(std::move(grid));
    for (const auto &c : chunks)
        total.merge(c);
    return total;
}

CdfExperimentResult run_cdf_experiment(const SystemConfig &config, CdfMode mode, const ExperimentOptions &options)
{
    config.validate();
    CdfExperimentResult result;
    result.scheme = config.scheme;
    result.mode = mode;
    result.params = analytic::sir_params(config.scheme, config.M, config.U);
    const auto grid = default_sir_grid();

    if (mode == CdfMode::marginal) {
        result.empirical =
            sample_marginal_cdf(result.params, grid, config.realizations, config.seed, StreamTag::marginal_cdf, options);
        result.counters.realizations = config.realizations;
    } else {
        const SystemConfig ref = reference_only(config);
        const auto powers = ref.power_vector();
        const int interferers = ref.interferers();
        auto chunks = run_chunks<CdfChunk>(config.realizations, options.chunk_size, options.workers, [&](const Chunk &chunk) {
            RngStream stream(config.seed, stream_id(StreamTag::physical_cdf, chunk.index));
            RealizationDrawer drawer(ref, make_geometry(ref));
            CdfChunk out{EmpiricalCdf(grid), {}};
            double sir[1];
            Eigen::VectorXcd fresh(ref.M);
            Eigen::MatrixXcd directions(ref.M, interferers);
            for (std::uint64_t r = 0; r < chunk.count; ++r) {
                drawer.draw(stream, out.counters);
                double x = 0.0;
                if (ref.scheme == Scheme::MRT) {
                    physical_sir_for_user(drawer.channels(), drawer.precoders(), powers, 0, sir);
                    x = sir[0];
                } else {
                    const auto &h = drawer.channels().ports[0].col(0);
                    const double desired = powers[0] * std::norm(h.dot(drawer.precoders().vectors.col(0)));
                    fill_cgauss(stream, fresh.col(0));
                    fresh *= std::sqrt(ref.beta_of(0));
                    for (int i = 0; i < interferers; ++i)
                        fill_cgauss(stream, directions.col(i));
                    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(directions);
                    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(ref.M, interferers);
                    double interference = 0.0;
                    for (int i = 0; i < interferers; ++i)
                        interference += powers[static_cast<std::size_t>(i + 1)] * std::norm(fresh.dot(q.col(i)));
                    x = interference > 0.0 ? desired / interference : kInfiniteSir;
                }
                if (is_infinite_sir(x))
                    ++out.counters.infinite_sir;
                out.cdf.add(x);
            }
            return out;
        });
        result.empirical = EmpiricalCdf(grid);
        for (const auto &c : chunks) {
            result.empirical.merge(c.cdf);
            result.counters.merge(c.counters);
        }
    }

    result.analytic_cdf.reserve(grid.size());
    result.analytic_finite_sum.reserve(grid.size());
    for (double g : grid) {
        result.analytic_cdf.push_back(analytic::betaprime_cdf(g, result.params));
        result.analytic_finite_sum.push_back(analytic::betaprime_cdf_finite_sum(g, result.params));
    }
    const auto params = result.params;
    result.ks = ks_distance(result.empirical, [params](double g) { return analytic::betaprime_cdf(g, params); });
    return result;
}

CorrEstimate surrogate_gain_correlation(std::span<const double> mu, int M_eff, int L, std::uint64_t n,
                                        std::uint64_t seed, const ExperimentOptions &options)
{
    const std::vector<double> mus(mu.begin(), mu.end());
    const auto width = static_cast<Eigen::Index>(mus.size());
    auto chunks = run_chunks<CorrelationAccumulator>(n, options.chunk_size, options.workers, [&](const Chunk &chunk) {
        RngStream stream(seed, stream_id(StreamTag::surrogate_correlation, chunk.index));
        CorrelationAccumulator acc(width);
        std::vector<double> row(mus.size());
        for (std::uint64_t r = 0; r < chunk.count; ++r) {
            surrogate_gain_sample(stream, mus, M_eff, L, row);
            acc.add(row);
        }
        return acc;
    });
    CorrelationAccumulator total(width);
    for (const auto &c : chunks)
        total.merge(c);
    CorrEstimate est;
    est.rho = total.correlation();
    est.samples = total.count();
    est.dropped_rows = total.dropped();
    for (std::size_t k = 0; k < mus.size(); ++k)
        est.ports.push_back(k);
    return est;
}

CorrelationExperimentResult run_correlation_experiment(const SystemConfig &config, const CorrelationOptions &corr,
                                                       const ExperimentOptions &options)
{
    config.validate();
    if (config.N < 3)
        throw ConfigError("N", "correlation experiment needs N >= 3");

    CorrelationExperimentResult result;
    const auto geometry = make_geometry(config);
    result.physical.ports = estimated_ports(config, corr.include_reference, result.port_set_note);
    result.reference_included = !result.physical.ports.empty() && result.physical.ports.front() == 0;
    for (std::size_t k = 0; k < geometry.location_count(); ++k)
        if (std::find(result.physical.ports.begin(), result.physical.ports.end(), k) == result.physical.ports.end())
            result.physical.excluded.push_back(k);
    for (std::size_t k : result.physical.ports)
        result.mu.push_back(geometry.mu[k]);

    const auto params = analytic::sir_params(config.scheme, config.M, config.U);
    const auto powers = config.power_vector();
    const auto width = static_cast<Eigen::Index>(result.physical.ports.size());

    struct Partial {
        CorrelationAccumulator acc;
        RunCounters counters;
    };
    auto chunks = run_chunks<Partial>(config.realizations, options.chunk_size, options.workers, [&](const Chunk &chunk) {
        RngStream stream(config.seed, stream_id(StreamTag::physical_correlation, chunk.index));
        RealizationDrawer drawer(config, geometry);
        Partial out{CorrelationAccumulator(width), {}};
        std::vector<double> sirs(geometry.location_count());
        std::vector<double> row(result.physical.ports.size());
        for (std::uint64_t r = 0; r < chunk.count; ++r) {
            drawer.draw(stream, out.counters);
            physical_sir_for_user(drawer.channels(), drawer.precoders(), powers, 0, sirs);
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = sirs[result.physical.ports[j]];
                if (is_infinite_sir(row[j]))
                    ++out.counters.infinite_sir;
            }
            out.acc.add(row);
        }
        return out;
    });
    CorrelationAccumulator total(width);
    for (const auto &c : chunks) {
        total.merge(c.acc);
        result.counters.merge(c.counters);
    }
    result.counters.dropped_rows = total.dropped();
    result.physical.rho = total.correlation();
    result.physical.samples = total.count();
    result.physical.dropped_rows = total.dropped();

    result.rho_x_model.resize(width, width);
    result.rho_u_model.resize(width, width);
    for (Eigen::Index i = 0; i < width; ++i)
        for (Eigen::Index j = 0; j < width; ++j) {
            const double mi = result.mu[static_cast<std::size_t>(i)];
            const double mj = result.mu[static_cast<std::size_t>(j)];
            result.rho_x_model(i, j) = analytic::rho_x_approx(mi, mj, params.a, params.b);
            result.rho_u_model(i, j) = analytic::rho_u_approx(mi, mj, params.a, params.b);
        }

    const std::uint64_t n_sur = corr.surrogate_realizations.value_or(config.realizations);
    result.surrogate = surrogate_gain_correlation(result.mu, params.a, params.b, n_sur, config.seed, options);
    result.surrogate.ports = result.physical.ports;
    result.surrogate.excluded = result.physical.excluded;

    for (Eigen::Index i = 0; i < width; ++i)
        for (Eigen::Index j = i + 1; j < width; ++j) {
            result.max_deviation = std::max(result.max_deviation, std::abs(result.physical.rho(i, j) - result.rho_x_model(i, j)));
            result.surrogate_max_deviation =
                std::max(result.surrogate_max_deviation, std::abs(result.surrogate.rho(i, j) - result.rho_u_model(i, j)));
        }
    return result;
}

OutageExperimentResult run_outage_experiment(const SystemConfig &config, std::vector<double> gamma_grid,
                                             const OutageOptions &outage, const ExperimentOptions &options)
{
    config.validate();
    if (gamma_grid.empty() || !std::is_sorted(gamma_grid.begin(), gamma_grid.end()) || !(gamma_grid.front() > 0.0))
        throw DomainError("outage threshold grid must be positive and sorted");

    OutageExperimentResult result;
    const auto geometry = make_geometry(config);
    result.selection = outage.selection_override.value_or(selection_set(config));
    if (result.selection.empty())
        throw DomainError("outage experiment needs a non-empty selection set");
    for (std::size_t k : result.selection)
        if (k >= geometry.location_count())
            throw DomainError("selection index out of range");
    result.params = analytic::sir_params(config.scheme, config.M, config.U);
    result.gamma = gamma_grid;
    result.n = config.realizations;
    const auto powers = config.power_vector();
    const int ports = static_cast<int>(result.selection.size());

    struct Partial {
        EmpiricalCdf correlated;
        std::vector<EmpiricalCdf> per_port;
        RunCounters counters;
    };
    auto chunks = run_chunks<Partial>(config.realizations, options.chunk_size, options.workers, [&](const Chunk &chunk) {
        RngStream stream(config.seed, stream_id(StreamTag::physical_outage, chunk.index));
        RealizationDrawer drawer(config, geometry);
        Partial out{EmpiricalCdf(gamma_grid), std::vector<EmpiricalCdf>(result.selection.size(), EmpiricalCdf(gamma_grid)), {}};
        std::vector<double> sirs(geometry.location_count());
        for (std::uint64_t r = 0; r < chunk.count; ++r) {
            drawer.draw(stream, out.counters);
            physical_sir_for_user(drawer.channels(), drawer.precoders(), powers, 0, sirs);
            for (std::size_t j = 0; j < result.selection.size(); ++j) {
                const double x = sirs[result.selection[j]];
                if (is_infinite_sir(x))
                    ++out.counters.infinite_sir;
                out.per_port[j].add(x);
            }
            out.correlated.add(select_best_port(sirs, result.selection).value);
        }
        return out;
    });

    EmpiricalCdf correlated(gamma_grid);
    std::vector<EmpiricalCdf> per_port(result.selection.size(), EmpiricalCdf(gamma_grid));
    for (const auto &c : chunks) {
        correlated.merge(c.correlated);
        for (std::size_t j = 0; j < per_port.size(); ++j)
            per_port[j].merge(c.per_port[j]);
        result.counters.merge(c.counters);
    }

    EmpiricalCdf iid(gamma_grid);
    if (outage.with_iid_benchmark) {
        const auto params = result.params;
        auto iid_chunks = run_chunks<EmpiricalCdf>(config.realizations, options.chunk_size, options.workers, [&](const Chunk &chunk) {
            RngStream stream(config.seed, stream_id(StreamTag::iid_outage, chunk.index));
            EmpiricalCdf cdf(gamma_grid);
            for (std::uint64_t r = 0; r < chunk.count; ++r) {
                double best = 0.0;
                for (int k = 0; k < ports; ++k)
                    best = std::max(best, marginal_model_sample(stream, params));
                cdf.add(best);
            }
            return cdf;
        });
        for (const auto &c : iid_chunks)
            iid.merge(c);
    }

    result.correlated = correlated.values();
    result.iid = iid.values();
    std::vector<std::vector<double>> port_values;
    for (const auto &p : per_port)
        port_values.push_back(p.values());
    for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
        result.correlated_ci.push_back(binomial_half_width(result.correlated[i], result.n));
        result.iid_ci.push_back(outage.with_iid_benchmark ? binomial_half_width(result.iid[i], result.n) : 0.0);
        result.envelope.push_back(analytic::outage_envelope(gamma_grid[i], result.params, ports));
        double upper = 1.0;
        double miss = 0.0;
        for (const auto &v : port_values) {
            upper = std::min(upper, v[i]);
            miss += 1.0 - v[i];
        }
        result.marginal_upper.push_back(upper);
        result.marginal_lower.push_back(std::max(0.0, 1.0 - miss));
    }
    return result;
}

} // namespace fama::mc
