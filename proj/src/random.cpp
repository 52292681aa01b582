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

#include "fama/random.hpp"

#include "fama/error.hpp"

namespace fama {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream_id)
{
    const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
    const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    return std::seed_seq{lo(seed), hi(seed), lo(stream_id), hi(stream_id), 0x46414d41u};
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id)
{
    auto seq = make_seed_seq(seed, stream_id);
    engine_.seed(seq);
}

Eigen::VectorXcd sample_cgauss_vec(RngStream &stream, Eigen::Index dim)
{
    if (dim < 1)
        throw DomainError("complex Gaussian vector dimension must be >= 1");
    Eigen::VectorXcd v(dim);
    fill_cgauss(stream, v.col(0));
    return v;
}

double sample_gamma_int(RngStream &stream, int shape)
{
    if (shape < 1)
        throw DomainError("Gamma shape must be an integer >= 1");
    if (shape <= 32) {
        double s = 0.0;
        for (int i = 0; i < shape; ++i)
            s += stream.exponential();
        return s;
    }
    std::gamma_distribution<double> gamma(static_cast<double>(shape), 1.0);
    return gamma(stream.engine());
}

} // namespace fama
