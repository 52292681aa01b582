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

#include "fama/monte_carlo.hpp"

#include "fama/error.hpp"
#include "fama/special_functions.hpp"

#include <algorithm>
#include <string>

namespace fama::mc {

void physical_sir_for_user(const ChannelSet &channels, const PrecoderSet &precoders, std::span<const double> powers,
                           int user, std::span<double> out)
{
    const int users = channels.users();
    if (precoders.users() != users || static_cast<int>(powers.size()) != users)
        throw DomainError("physical_sir: users, precoders and powers disagree in size");
    if (user < 0 || user >= users)
        throw DomainError("physical_sir: user index out of range");
    if (precoders.vectors.rows() != channels.antennas())
        throw DomainError("physical_sir: precoder length differs from antenna count");
    const auto &h = channels.ports[static_cast<std::size_t>(user)];
    if (static_cast<Eigen::Index>(out.size()) != h.cols())
        throw DomainError("physical_sir: output size differs from location count");

    double power_sum = 0.0;
    for (double p : powers)
        power_sum += p;

    // proj(i, k) = w_i^H h_k; |.|^2 equals |h_k^H w_i|^2
    const Eigen::MatrixXcd proj = precoders.vectors.adjoint() * h;
    for (Eigen::Index k = 0; k < h.cols(); ++k) {
        double desired = 0.0;
        double interference = 0.0;
        for (int i = 0; i < users; ++i) {
            const double g = powers[static_cast<std::size_t>(i)] * std::norm(proj(i, k));
            if (i == user)
                desired = g;
            else
                interference += g;
        }
        const double floor = kNullingFloor * h.col(k).squaredNorm() * power_sum;
        out[static_cast<std::size_t>(k)] = interference <= floor ? kInfiniteSir : desired / interference;
    }
}

Eigen::MatrixXd physical_sir_per_port(const ChannelSet &channels, const PrecoderSet &precoders,
                                      std::span<const double> powers)
{
    Eigen::MatrixXd sirs(channels.users(), channels.location_count());
    std::vector<double> row(static_cast<std::size_t>(channels.location_count()));
    for (int u = 0; u < channels.users(); ++u) {
        physical_sir_for_user(channels, precoders, powers, u, row);
        for (std::size_t k = 0; k < row.size(); ++k)
            sirs(u, static_cast<Eigen::Index>(k)) = row[k];
    }
    return sirs;
}

Selection select_best_port(std::span<const double> sirs, std::span<const std::size_t> selection)
{
    if (selection.empty())
        throw DomainError("select_best_port: empty selection set");
    Selection best{selection.front(), -1.0};
    bool first = true;
    for (std::size_t k : selection) {
        if (k >= sirs.size())
            throw DomainError("select_best_port: port index " + std::to_string(k) + " out of range");
        const double v = sirs[k];
        if (first || v > best.value || (v == best.value && k < best.port)) {
            best = {k, v};
            first = false;
        }
    }
    return best;
}

double marginal_model_sample(RngStream &stream, analytic::BetaPrimeParams params)
{
    params.validate();
    const double num = sample_gamma_int(stream, params.a);
    const double den = sample_gamma_int(stream, params.b);
    return num / den;
}

void surrogate_gain_sample(RngStream &stream, std::span<const double> mu, int M_eff, int L, std::span<double> out)
{
    if (M_eff < 1 || L < 1)
        throw DomainError("surrogate_gain_sample requires M_eff, L >= 1");
    if (out.size() != mu.size())
        throw DomainError("surrogate_gain_sample: output size mismatch");
    const double common = sample_gamma_int(stream, M_eff);
    for (std::size_t k = 0; k < mu.size(); ++k)
        out[k] = mu[k] * mu[k] * common + sample_gamma_int(stream, L);
}

std::vector<double> surrogate_gain_sample(RngStream &stream, std::span<const double> mu, int M_eff, int L)
{
    std::vector<double> out(mu.size());
    surrogate_gain_sample(stream, mu, M_eff, L, out);
    return out;
}

PearsonResult pearson_correlation(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw DomainError("pearson_correlation: length mismatch");
    CorrelationAccumulator acc(2);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double row[2] = {x[i], y[i]};
        acc.add(row);
    }
    if (acc.count() < 2)
        throw DomainError("pearson_correlation needs at least two finite pairs");
    return {acc.correlation()(0, 1), static_cast<std::size_t>(acc.count()), static_cast<std::size_t>(acc.dropped())};
}

CorrelationAccumulator::CorrelationAccumulator(Eigen::Index width)
    : mean_(Eigen::VectorXd::Zero(width)), comoment_(Eigen::MatrixXd::Zero(width, width)), delta_(width)
{
}

void CorrelationAccumulator::add(std::span<const double> row)
{
    if (static_cast<Eigen::Index>(row.size()) != mean_.size())
        throw DomainError("CorrelationAccumulator: row width mismatch");
    for (double v : row)
        if (!std::isfinite(v)) {
            ++dropped_;
            return;
        }
    ++n_;
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (Eigen::Index i = 0; i < mean_.size(); ++i) {
        delta_(i) = row[static_cast<std::size_t>(i)] - mean_(i);
        mean_(i) += delta_(i) * inv_n;
    }
    // C += delta_old * (x - mean_new)^T; symmetric, so fill the upper part
    for (Eigen::Index j = 0; j < mean_.size(); ++j) {
        const double after = row[static_cast<std::size_t>(j)] - mean_(j);
        for (Eigen::Index i = 0; i <= j; ++i)
            comoment_(i, j) += delta_(i) * after;
    }
}

void CorrelationAccumulator::merge(const CorrelationAccumulator &other)
{
    if (other.width() != width())
        throw DomainError("CorrelationAccumulator: merge width mismatch");
    dropped_ += other.dropped_;
    if (other.n_ == 0)
        return;
    if (n_ == 0) {
        n_ = other.n_;
        mean_ = other.mean_;
        comoment_ = other.comoment_;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const Eigen::VectorXd delta = other.mean_ - mean_;
    for (Eigen::Index j = 0; j < mean_.size(); ++j)
        for (Eigen::Index i = 0; i <= j; ++i)
            comoment_(i, j) += other.comoment_(i, j) + delta(i) * delta(j) * na * nb / n;
    mean_ += delta * (nb / n);
    n_ += other.n_;
}

double CorrelationAccumulator::variance(Eigen::Index i) const
{
    if (n_ < 2)
        throw DomainError("variance needs at least two samples");
    return comoment_(i, i) / static_cast<double>(n_ - 1);
}

Eigen::MatrixXd CorrelationAccumulator::correlation() const
{
    if (n_ < 2)
        throw DomainError("correlation needs at least two finite samples");
    const Eigen::Index w = width();
    Eigen::MatrixXd r(w, w);
    for (Eigen::Index i = 0; i < w; ++i)
        if (!(comoment_(i, i) > 0.0))
            throw DomainError("correlation undefined: zero variance in column " + std::to_string(i));
    for (Eigen::Index j = 0; j < w; ++j) {
        r(j, j) = 1.0;
        for (Eigen::Index i = 0; i < j; ++i) {
            const double v = std::clamp(comoment_(i, j) / std::sqrt(comoment_(i, i) * comoment_(j, j)), -1.0, 1.0);
            r(i, j) = v;
            r(j, i) = v;
        }
    }
    return r;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> grid) : grid_(std::move(grid)), bins_(grid_.size(), 0)
{
    if (!std::is_sorted(grid_.begin(), grid_.end()))
        throw DomainError("EmpiricalCdf grid must be sorted");
}

EmpiricalCdf EmpiricalCdf::from_samples(std::vector<double> grid, std::span<const double> samples)
{
    EmpiricalCdf cdf(std::move(grid));
    for (double x : samples)
        cdf.add(x);
    return cdf;
}

void EmpiricalCdf::add(double x)
{
    ++n_;
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    if (it != grid_.end())
        ++bins_[static_cast<std::size_t>(it - grid_.begin())];
}

void EmpiricalCdf::merge(const EmpiricalCdf &other)
{
    if (other.grid_ != grid_)
        throw DomainError("EmpiricalCdf merge requires identical grids");
    for (std::size_t i = 0; i < bins_.size(); ++i)
        bins_[i] += other.bins_[i];
    n_ += other.n_;
}

std::vector<std::uint64_t> EmpiricalCdf::cumulative_counts() const
{
    std::vector<std::uint64_t> c(bins_.size());
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < bins_.size(); ++i) {
        run += bins_[i];
        c[i] = run;
    }
    return c;
}

std::vector<double> EmpiricalCdf::values() const
{
    const auto c = cumulative_counts();
    std::vector<double> v(c.size(), 0.0);
    if (n_ == 0)
        return v;
    for (std::size_t i = 0; i < c.size(); ++i)
        v[i] = static_cast<double>(c[i]) / static_cast<double>(n_);
    return v;
}

double EmpiricalCdf::value_at(std::size_t i) const
{
    if (i >= grid_.size())
        throw DomainError("EmpiricalCdf index out of range");
    if (n_ == 0)
        return 0.0;
    std::uint64_t run = 0;
    for (std::size_t j = 0; j <= i; ++j)
        run += bins_[j];
    return static_cast<double>(run) / static_cast<double>(n_);
}

std::vector<double> default_sir_grid() { return special::log_grid({1e-3, 1e3}, 200); }

double ks_distance(const EmpiricalCdf &empirical, const std::function<double(double)> &cdf)
{
    const auto values = empirical.values();
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        worst = std::max(worst, std::abs(values[i] - cdf(empirical.grid()[i])));
    return worst;
}

double binomial_half_width(double p, std::uint64_t n, double z)
{
    if (n == 0)
        return 0.0;
    return z * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

} // namespace fama::mc
