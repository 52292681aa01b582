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

#ifndef FAMA_CHANNEL_HPP
#define FAMA_CHANNEL_HPP

#include "fama/linalg.hpp"
#include "fama/random.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fama {

enum class Scheme { MRT, ZF };

// Where the CSI reference location sits relative to the selectable ports.
//   member:   the reference is selectable port 1 (N locations in total).
//   external: the reference sits at d = 0 and the N selectable ports occupy
//             the remaining N of N+1 uniformly spaced locations.
enum class ReferenceMode { member, external };

std::string to_string(Scheme scheme);
std::string to_string(ReferenceMode mode);
Scheme parse_scheme(std::string_view text);
ReferenceMode parse_reference_mode(std::string_view text);

struct SystemConfig {
    int M = 8;       // BS antennas
    int U = 4;       // users
    int N = 8;       // selectable ports per user
    double W = 0.25; // aperture, wavelengths
    Scheme scheme = Scheme::MRT;
    std::vector<double> beta;   // large-scale gains; empty = all 1
    std::vector<double> powers; // transmit powers; empty = all 1
    ReferenceMode reference_mode = ReferenceMode::member;
    bool include_reference_in_selection = true;
    std::uint64_t seed = 1;
    std::uint64_t realizations = 100000;

    int interferers() const noexcept { return U - 1; }
    double beta_of(int user) const { return beta.empty() ? 1.0 : beta.at(static_cast<std::size_t>(user)); }
    double power_of(int user) const { return powers.empty() ? 1.0 : powers.at(static_cast<std::size_t>(user)); }
    std::vector<double> power_vector() const;

    // Throws ConfigError naming the violated key.
    void validate() const;
};

// Port locations (wavelengths) and reference correlation coefficients.
// Index 0 is always the CSI reference location (d = 0, mu = 1).
struct PortGeometry {
    std::vector<double> displacements;
    std::vector<double> mu;

    std::size_t location_count() const noexcept { return displacements.size(); }
};

// d_k = (k-1)/(N-1) * W for N >= 2, a single port at 0 for N = 1.
std::vector<double> port_displacements(int N, double W);

// mu_k = J0(2 pi |d_k - d_1|), mu_1 = 1.
std::vector<double> mu_vector(std::span<const double> displacements);

// Spatial kernel J0(2 pi |d_k - d_l|) (large-scale gain factored out).
Eigen::MatrixXd correlation_matrix(std::span<const double> displacements);

// Geometry for a configuration, honouring the reference mode.
PortGeometry make_geometry(const SystemConfig &config);

// 0-based location indices the user may select from.
std::vector<std::size_t> selection_set(const SystemConfig &config);

// Per-user reference draws, innovations and assembled per-port channels.
//
// draws[u].col(0) is x_{u,0}; draws[u].col(k) for k >= 1 is the innovation of
// location k. ports[u].col(k) is h at location k, with
// ports[u].col(0) = sqrt(beta_u) x_{u,0}.
struct ChannelSet {
    std::vector<Eigen::MatrixXcd> draws;
    std::vector<Eigen::MatrixXcd> ports;

    int users() const noexcept { return static_cast<int>(ports.size()); }
    Eigen::Index antennas() const noexcept { return ports.empty() ? 0 : ports.front().rows(); }
    Eigen::Index location_count() const noexcept { return ports.empty() ? 0 : ports.front().cols(); }
};

// H_1 = [h_{1,1}, ..., h_{U,1}] (M x U).
ComplexMatrix reference_matrix(const ChannelSet &channels);

ChannelSet generate_channel_set(RngStream &stream, const SystemConfig &config, const PortGeometry &geometry);

// In-place variant; reuses the buffers of `out`. Draw order is identical.
void generate_channel_set(RngStream &stream, const SystemConfig &config, const PortGeometry &geometry,
                          ChannelSet &out);

} // namespace fama

#endif
