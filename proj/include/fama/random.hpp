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

#ifndef FAMA_RANDOM_HPP
#define FAMA_RANDOM_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace fama {

// Reproducible random stream keyed by (seed, stream_id).
//
// Monte-Carlo work is split into fixed-size chunks and chunk c draws from
// RngStream(seed, c), so results do not depend on how chunks are scheduled
// across workers. A stream is single-owner; copy it to fork an identical
// sequence.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    double normal() { return normal_(engine_); }
    double exponential() { return exponential_(engine_); }
    double uniform() { return uniform_(engine_); }

    std::mt19937_64 &engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::exponential_distribution<double> exponential_{1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// i.i.d. CN(0,1) entries: real and imaginary parts each N(0, 1/2).
Eigen::VectorXcd sample_cgauss_vec(RngStream &stream, Eigen::Index dim);

// Fill an existing column/vector in place (same draw order as above).
template <typename Derived>
void fill_cgauss(RngStream &stream, Eigen::MatrixBase<Derived> &&out)
{
    constexpr double s = 0.70710678118654752440;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        const double re = stream.normal();
        const double im = stream.normal();
        out(i) = {s * re, s * im};
    }
}

// Gamma(shape, 1) variate for integer shape >= 1.
double sample_gamma_int(RngStream &stream, int shape);

} // namespace fama

#endif
