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

#include "fama/channel.hpp"

#include "fama/error.hpp"
#include "fama/special_functions.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace fama {

namespace {

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto &c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string to_string(Scheme scheme) { return scheme == Scheme::MRT ? "MRT" : "ZF"; }

std::string to_string(ReferenceMode mode) { return mode == ReferenceMode::member ? "member" : "external"; }

Scheme parse_scheme(std::string_view text)
{
    const auto u = upper(text);
    if (u == "MRT")
        return Scheme::MRT;
    if (u == "ZF")
        return Scheme::ZF;
    throw ConfigError("scheme", "expected MRT or ZF, got '" + std::string(text) + "'");
}

ReferenceMode parse_reference_mode(std::string_view text)
{
    const auto u = upper(text);
    if (u == "MEMBER")
        return ReferenceMode::member;
    if (u == "EXTERNAL")
        return ReferenceMode::external;
    throw ConfigError("reference_mode", "expected member or external, got '" + std::string(text) + "'");
}

std::vector<double> SystemConfig::power_vector() const
{
    std::vector<double> p(static_cast<std::size_t>(U));
    for (int u = 0; u < U; ++u)
        p[static_cast<std::size_t>(u)] = power_of(u);
    return p;
}

void SystemConfig::validate() const
{
    if (M < 1)
        throw ConfigError("M", "must be >= 1");
    if (U < 2)
        throw ConfigError("U", "must be >= 2 (at least one interferer for a finite SIR)");
    if (N < 1)
        throw ConfigError("N", "must be >= 1");
    if (!std::isfinite(W) || W < 0.0)
        throw ConfigError("W", "must be a finite value >= 0");
    if (scheme == Scheme::ZF && M < U)
        throw ConfigError("M", "ZF requires M >= U (got M=" + std::to_string(M) + ", U=" + std::to_string(U) + ")");
    if (!beta.empty()) {
        if (beta.size() != static_cast<std::size_t>(U))
            throw ConfigError("beta", "needs exactly U entries");
        for (double b : beta)
            if (!(b > 0.0) || !std::isfinite(b))
                throw ConfigError("beta", "entries must be positive");
    }
    if (!powers.empty()) {
        if (powers.size() != static_cast<std::size_t>(U))
            throw ConfigError("powers", "needs exactly U entries");
        for (double p : powers)
            if (!(p > 0.0) || !std::isfinite(p))
                throw ConfigError("powers", "entries must be positive");
    }
    if (realizations < 1)
        throw ConfigError("realizations", "must be >= 1");
    if (reference_mode == ReferenceMode::member && !include_reference_in_selection && N < 2)
        throw ConfigError("include_reference_in_selection", "excluding the reference leaves no selectable port");
}

std::vector<double> port_displacements(int N, double W)
{
    if (N < 1)
        throw DomainError("port_displacements requires N >= 1");
    if (!(W >= 0.0))
        throw DomainError("port_displacements requires W >= 0");
    std::vector<double> d(static_cast<std::size_t>(N), 0.0);
    if (N == 1)
        return d;
    for (int k = 0; k < N; ++k)
        d[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(N - 1) * W;
    return d;
}

std::vector<double> mu_vector(std::span<const double> displacements)
{
    std::vector<double> mu(displacements.size(), 1.0);
    for (std::size_t k = 1; k < displacements.size(); ++k)
        mu[k] = special::bessel_j0(2.0 * std::numbers::pi * std::abs(displacements[k] - displacements[0]));
    return mu;
}

Eigen::MatrixXd correlation_matrix(std::span<const double> displacements)
{
    const auto n = static_cast<Eigen::Index>(displacements.size());
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        r(k, k) = 1.0;
        for (Eigen::Index l = k + 1; l < n; ++l) {
            const double v = special::bessel_j0(
                2.0 * std::numbers::pi *
                std::abs(displacements[static_cast<std::size_t>(k)] - displacements[static_cast<std::size_t>(l)]));
            r(k, l) = v;
            r(l, k) = v;
        }
    }
    return r;
}

PortGeometry make_geometry(const SystemConfig &config)
{
    PortGeometry g;
    const int locations = config.reference_mode == ReferenceMode::external ? config.N + 1 : config.N;
    g.displacements = port_displacements(locations, config.W);
    g.mu = mu_vector(g.displacements);
    return g;
}

std::vector<std::size_t> selection_set(const SystemConfig &config)
{
    std::vector<std::size_t> set;
    const bool external = config.reference_mode == ReferenceMode::external;
    const std::size_t first = (external || !config.include_reference_in_selection) ? 1 : 0;
    const std::size_t locations = static_cast<std::size_t>(external ? config.N + 1 : config.N);
    for (std::size_t k = first; k < locations; ++k)
        set.push_back(k);
    return set;
}

ComplexMatrix reference_matrix(const ChannelSet &channels)
{
    ComplexMatrix h(channels.antennas(), channels.users());
    for (int u = 0; u < channels.users(); ++u)
        h.col(u) = channels.ports[static_cast<std::size_t>(u)].col(0);
    return h;
}

void generate_channel_set(RngStream &stream, const SystemConfig &config, const PortGeometry &geometry,
                          ChannelSet &out)
{
    const auto users = static_cast<std::size_t>(config.U);
    const auto m = static_cast<Eigen::Index>(config.M);
    const auto p = static_cast<Eigen::Index>(geometry.location_count());
    out.draws.resize(users);
    out.ports.resize(users);
    for (std::size_t u = 0; u < users; ++u) {
        auto &x = out.draws[u];
        auto &h = out.ports[u];
        x.resize(m, p);
        h.resize(m, p);
        for (Eigen::Index k = 0; k < p; ++k)
            fill_cgauss(stream, x.col(k));

        const double gain = std::sqrt(config.beta_of(static_cast<int>(u)));
        h.col(0) = gain * x.col(0);
        for (Eigen::Index k = 1; k < p; ++k) {
            const double mu = geometry.mu[static_cast<std::size_t>(k)];
            const double spread = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            h.col(k) = gain * (mu * x.col(0) + spread * x.col(k));
        }
    }
}

ChannelSet generate_channel_set(RngStream &stream, const SystemConfig &config, const PortGeometry &geometry)
{
    ChannelSet out;
    generate_channel_set(stream, config, geometry, out);
    return out;
}

} // namespace fama
