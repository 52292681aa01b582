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
#include "fama/monte_carlo.hpp"
#include "fama/parallel.hpp"
#include "fama/precoding.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>

using namespace fama;
using namespace fama::mc;

TEST_CASE("port selection")
{
    const std::vector<double> s{1.0, 3.0, 3.0, 2.0};
    const std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(select_best_port(s, all).port == 1);
    const std::vector<std::size_t> tail{2, 3};
    CHECK(select_best_port(s, tail).port == 2);
    const std::vector<double> inf{1.0, kInfiniteSir, 5.0};
    const std::vector<std::size_t> three{0, 1, 2};
    CHECK(is_infinite_sir(select_best_port(inf, three).value));
    CHECK_THROWS_AS(select_best_port(s, std::vector<std::size_t>{}), DomainError);
}

TEST_CASE("adding ports never worsens the selected SIR")
{
    RngStream st(1, 0);
    for (int r = 0; r < 200; ++r) {
        std::vector<double> s(8);
        for (auto &x : s)
            x = st.exponential();
        double prev = 0.0;
        for (std::size_t k = 1; k <= s.size(); ++k) {
            std::vector<std::size_t> sel(k);
            for (std::size_t i = 0; i < k; ++i)
                sel[i] = i;
            const double v = select_best_port(s, sel).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("ZF reference port is nulled and reported infinite")
{
    SystemConfig c;
    c.scheme = Scheme::ZF;
    const auto g = make_geometry(c);
    RngStream st(3, 0);
    const auto ch = generate_channel_set(st, c, g);
    const auto pre = make_precoders(c.scheme, reference_matrix(ch));
    const auto sir = physical_sir_per_port(ch, pre, c.power_vector());
    for (int u = 0; u < c.U; ++u) {
        CHECK(is_infinite_sir(sir(u, 0)));
        for (Eigen::Index k = 1; k < sir.cols(); ++k)
            CHECK(std::isfinite(sir(u, k)));
    }
}

TEST_CASE("MRT reference SIR is 1 / sum of projected interference")
{
    SystemConfig c;
    c.N = 1;
    const auto g = make_geometry(c);
    RngStream st(8, 0);
    const auto ch = generate_channel_set(st, c, g);
    const auto H = reference_matrix(ch);
    const auto pre = mrt_precoders(H);
    std::vector<double> out(1);
    physical_sir_for_user(ch, pre, c.power_vector(), 0, out);
    double interference = 0.0;
    for (int i = 1; i < c.U; ++i)
        interference += std::norm(H.col(0).dot(H.col(i))) / H.col(i).squaredNorm();
    CHECK(out[0] == doctest::Approx(H.col(0).squaredNorm() / interference).epsilon(1e-12));
}

TEST_CASE("marginal sampler moments")
{
    RngStream st(5, 0);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += marginal_model_sample(st, {8, 3});
    // E[X] = a / (b - 1)
    CHECK(sum / n == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("pearson drops non-finite pairs")
{
    const std::vector<double> x{1, 2, 3, 4, INFINITY};
    const std::vector<double> y{2, 4, 6, 8, 1};
    const auto r = pearson_correlation(x, y);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.used == 4);
    CHECK(r.dropped == 1);
}

TEST_CASE("accumulator merge equals sequential accumulation")
{
    RngStream st(6, 0);
    CorrelationAccumulator all(3), a(3), b(3);
    for (int i = 0; i < 1000; ++i) {
        const double z = st.normal();
        const std::vector<double> row{z, z + st.normal(), st.normal()};
        all.add(row);
        (i < 400 ? a : b).add(row);
    }
    a.merge(b);
    CHECK((a.correlation() - all.correlation()).norm() < 1e-12);
    CHECK(all.correlation()(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.05));
}

TEST_CASE("empirical CDF counts strictly below each threshold")
{
    const std::vector<double> samples{0.5, 1.0, 1.0, 2.0, 5.0};
    const auto cdf = EmpiricalCdf::from_samples({1.0, 2.0, 10.0}, samples);
    CHECK(cdf.cumulative_counts() == std::vector<std::uint64_t>{1, 3, 5});
    CHECK(cdf.value_at(1) == doctest::Approx(0.6));
    CHECK(default_sir_grid().size() == 200);
    CHECK(binomial_half_width(0.5, 10000) == doctest::Approx(0.0098).epsilon(1e-3));
}

TEST_CASE("chunked execution is ordered and worker-invariant")
{
    const auto fn = [](const Chunk &c) { return c.index * 1000 + c.count; };
    const auto one = run_chunks<std::uint64_t>(10500, 1000, 1, fn);
    const auto many = run_chunks<std::uint64_t>(10500, 1000, 8, fn);
    CHECK(one == many);
    CHECK(one.size() == 11);
    CHECK(one.back() == 10500);
    CHECK_THROWS_AS(run_chunks<int>(10, 2, 3, [](const Chunk &c) -> int {
                        if (c.index == 3)
                            throw DomainError("boom");
                        return 0;
                    }),
                    DomainError);
}

TEST_CASE("FAMA_LAB_WORKERS caps the worker count")
{
    ::setenv("FAMA_LAB_WORKERS", "3", 1);
    CHECK(default_worker_count() == 3);
    ::setenv("FAMA_LAB_WORKERS", "zero", 1);
    CHECK(default_worker_count() >= 1);
    ::unsetenv("FAMA_LAB_WORKERS");
}
