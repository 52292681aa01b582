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

#ifndef FAMA_MONTE_CARLO_HPP
#define FAMA_MONTE_CARLO_HPP

#include "fama/analytic.hpp"
#include "fama/channel.hpp"
#include "fama/precoding.hpp"
#include "fama/random.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace fama::mc {

// Sentinel for a port whose interference vanishes (nulled ZF reference port).
inline constexpr double kInfiniteSir = std::numeric_limits<double>::infinity();
inline bool is_infinite_sir(double x) noexcept { return std::isinf(x) && x > 0.0; }

// Interference power at or below this fraction of ||h||^2 * sum_i P_i is
// treated as exactly nulled. Floating-point ZF residuals sit near 1e-32.
inline constexpr double kNullingFloor = 1e-20;

// X_{u,k} = P_u |h_{u,k}^H w_u|^2 / sum_{i != u} P_i |h_{u,k}^H w_i|^2 for
// every user (rows) and port location (columns).
Eigen::MatrixXd physical_sir_per_port(const ChannelSet &channels, const PrecoderSet &precoders,
                                      std::span<const double> powers);

// Row `user` of the above, written into `out` (size = location count).
void physical_sir_for_user(const ChannelSet &channels, const PrecoderSet &precoders, std::span<const double> powers,
                           int user, std::span<double> out);

struct Selection {
    std::size_t port = 0; // 0-based location index
    double value = 0.0;
};

// argmax over the selection set; ties go to the smallest index and the
// infinite sentinel dominates every finite value.
Selection select_best_port(std::span<const double> sirs, std::span<const std::size_t> selection);

// G_a / G_b with independent integer-shape Gamma variates: Beta-prime(a,b).
double marginal_model_sample(RngStream &stream, analytic::BetaPrimeParams params);

// Surrogate desired gains U_k = mu_k^2 S_c + S_k with one shared
// S_c ~ Gamma(M_eff,1) per call and independent S_k ~ Gamma(L,1).
std::vector<double> surrogate_gain_sample(RngStream &stream, std::span<const double> mu, int M_eff, int L);
void surrogate_gain_sample(RngStream &stream, std::span<const double> mu, int M_eff, int L, std::span<double> out);

struct PearsonResult {
    double value = 0.0;
    std::size_t used = 0;
    std::size_t dropped = 0; // pairs with a non-finite member
};

PearsonResult pearson_correlation(std::span<const double> x, std::span<const double> y);

// Streaming means and co-moments of a fixed-width sample vector. Rows with a
// non-finite entry are dropped and counted. merge() is Chan's pairwise
// update, so merging chunk accumulators in chunk order is deterministic.
class CorrelationAccumulator {
public:
    CorrelationAccumulator() = default;
    explicit CorrelationAccumulator(Eigen::Index width);

    void add(std::span<const double> row);
    void merge(const CorrelationAccumulator &other);

    Eigen::Index width() const noexcept { return mean_.size(); }
    std::uint64_t count() const noexcept { return n_; }
    std::uint64_t dropped() const noexcept { return dropped_; }
    const Eigen::VectorXd &mean() const noexcept { return mean_; }
    double variance(Eigen::Index i) const;

    // Pearson matrix; throws DomainError on zero variance or n < 2.
    Eigen::MatrixXd correlation() const;

private:
    std::uint64_t n_ = 0;
    std::uint64_t dropped_ = 0;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd comoment_;
    Eigen::VectorXd delta_;
};

// Empirical CDF on a fixed threshold grid: count(i) = #{x < grid[i]}.
class EmpiricalCdf {
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> grid);

    static EmpiricalCdf from_samples(std::vector<double> grid, std::span<const double> samples);

    void add(double x);
    void merge(const EmpiricalCdf &other);

    const std::vector<double> &grid() const noexcept { return grid_; }
    std::uint64_t sample_size() const noexcept { return n_; }
    std::vector<std::uint64_t> cumulative_counts() const;
    std::vector<double> values() const;
    double value_at(std::size_t i) const;

private:
    std::vector<double> grid_;
    std::vector<std::uint64_t> bins_; // bins_[i] = #{grid[i-1] <= x < grid[i]}
    std::uint64_t n_ = 0;
};

// 200 log-spaced thresholds on [1e-3, 1e3].
std::vector<double> default_sir_grid();

// max_i |F_hat(g_i) - F(g_i)| over the empirical grid.
double ks_distance(const EmpiricalCdf &empirical, const std::function<double(double)> &cdf);

// Binomial confidence half-width z sqrt(p(1-p)/n).
double binomial_half_width(double p, std::uint64_t n, double z = 1.959963984540054);

struct CorrEstimate {
    Eigen::MatrixXd rho;                // Pearson matrix over `ports`
    std::vector<std::size_t> ports;     // 0-based locations estimated
    std::vector<std::size_t> excluded;  // locations left out
    std::uint64_t samples = 0;
    std::uint64_t dropped_rows = 0;
};

} // namespace fama::mc

#endif
