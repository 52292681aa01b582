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

#ifndef FAMA_EXPERIMENTS_HPP
#define FAMA_EXPERIMENTS_HPP

#include "fama/analytic.hpp"
#include "fama/channel.hpp"
#include "fama/monte_carlo.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fama::mc {

struct ExperimentOptions {
    std::size_t workers = 0;            // 0: default_worker_count()
    std::uint64_t chunk_size = 10000;   // realizations per RngStream
};

struct RunCounters {
    std::uint64_t realizations = 0;
    std::uint64_t resampled_singular = 0; // discarded ZF draws with a singular Gram
    std::uint64_t infinite_sir = 0;       // evaluated SIRs equal to the sentinel
    std::uint64_t dropped_rows = 0;       // correlation rows with a non-finite entry

    void merge(const RunCounters &other);
};

// Stream-id namespaces so that the sub-experiments of one run never share
// random numbers. stream_id = (tag << 32) | chunk index.
enum class StreamTag : std::uint64_t {
    marginal_cdf = 1,
    physical_cdf = 2,
    physical_correlation = 3,
    surrogate_correlation = 4,
    physical_outage = 5,
    iid_outage = 6,
    marginal_tail = 7,
};

std::uint64_t stream_id(StreamTag tag, std::uint64_t chunk);

// ---------------------------------------------------------------- per-port CDF

enum class CdfMode {
    marginal,           // exact-law Gamma-ratio sampler
    physical_reference, // SIR at the reference location from simulated channels
};

std::string to_string(CdfMode mode);

struct CdfExperimentResult {
    Scheme scheme = Scheme::MRT;
    CdfMode mode = CdfMode::marginal;
    analytic::BetaPrimeParams params;
    EmpiricalCdf empirical;
    std::vector<double> analytic_cdf;        // incomplete-Beta form
    std::vector<double> analytic_finite_sum; // finite-sum form
    double ks = 0.0;
    RunCounters counters;
};

// Reference-location SIR of user 0.
//
// Physical MRT evaluates the literal SIR from simulated channels. Physical ZF
// keeps the simulated desired gain P_u |h_{u,1}^H w_u|^2 but draws the
// interference as sum_i P_i |e^H q_i|^2 with a fresh e ~ CN(0, beta_u I) and
// freshly drawn orthonormal isotropic directions q_i, because the literal
// reference port is nulled exactly.
CdfExperimentResult run_cdf_experiment(const SystemConfig &config, CdfMode mode, const ExperimentOptions &options = {});

// Empirical CDF of n marginal-law samples on an arbitrary grid.
EmpiricalCdf sample_marginal_cdf(analytic::BetaPrimeParams params, std::vector<double> grid, std::uint64_t n,
                                 std::uint64_t seed, StreamTag tag, const ExperimentOptions &options = {});

// ------------------------------------------------------------ port correlation

struct CorrelationExperimentResult {
    CorrEstimate physical;           // simulated SIR correlation
    Eigen::MatrixXd rho_x_model;     // rho_x_approx overlay on physical.ports
    CorrEstimate surrogate;          // surrogate desired-gain correlation
    Eigen::MatrixXd rho_u_model;     // rho_u_approx overlay on surrogate.ports
    std::vector<double> mu;          // mu of physical.ports
    double max_deviation = 0.0;      // max off-diagonal |physical - rho_x_model|
    double surrogate_max_deviation = 0.0;
    bool reference_included = false;
    std::string port_set_note;
    RunCounters counters;
};

struct CorrelationOptions {
    // Estimate pairs involving the reference location (member mode only;
    // forced off for ZF whose reference SIR is unbounded).
    bool include_reference = false;
    std::optional<std::uint64_t> surrogate_realizations;
};

CorrelationExperimentResult run_correlation_experiment(const SystemConfig &config,
                                                       const CorrelationOptions &corr = {},
                                                       const ExperimentOptions &options = {});

// Surrogate-only gain correlation for explicit mu values.
CorrEstimate surrogate_gain_correlation(std::span<const double> mu, int M_eff, int L, std::uint64_t n,
                                        std::uint64_t seed, const ExperimentOptions &options = {});

// ------------------------------------------------------------------- outage

struct OutageExperimentResult {
    std::vector<double> gamma;
    std::vector<double> correlated;    // empirical P_out with port selection
    std::vector<double> correlated_ci; // 95% binomial half-widths
    std::vector<double> iid;           // empirical max of N independent marginal samples
    std::vector<double> iid_ci;
    std::vector<analytic::OutageEnvelope> envelope;
    // Bounds in their general form, from the empirical per-port marginals:
    // min_k F_k and max(0, 1 - sum_k (1 - F_k)).
    std::vector<double> marginal_upper;
    std::vector<double> marginal_lower;
    std::vector<std::size_t> selection;
    analytic::BetaPrimeParams params;
    std::uint64_t n = 0;
    RunCounters counters;
};

struct OutageOptions {
    std::optional<std::vector<std::size_t>> selection_override;
    bool with_iid_benchmark = true;
};

OutageExperimentResult run_outage_experiment(const SystemConfig &config, std::vector<double> gamma_grid,
                                             const OutageOptions &outage = {}, const ExperimentOptions &options = {});

} // namespace fama::mc

#endif
