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

#include "fama/analytic.hpp"
#include "fama/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace fama;
using namespace fama::analytic;

TEST_CASE("scheme parameters")
{
    CHECK(m_eff(Scheme::MRT, 8, 4) == 8);
    CHECK(m_eff(Scheme::ZF, 8, 4) == 5);
    CHECK(m_eff(Scheme::ZF, 4, 4) == 1);
    const auto p = sir_params(Scheme::ZF, 8, 4);
    CHECK(p.a == 5);
    CHECK(p.b == 3);
    CHECK_THROWS(m_eff(Scheme::ZF, 3, 4));
    CHECK_THROWS_AS(BetaPrimeParams::from_real(2.5, 3), DomainError);
}

TEST_CASE("Beta-prime CDF reference values")
{
    CHECK(betaprime_cdf(1.0, {8, 3}) == doctest::Approx(0.0546875).epsilon(1e-13));
    CHECK(betaprime_cdf(1.0, {5, 3}) == doctest::Approx(29.0 / 128.0).epsilon(1e-13));
    CHECK(betaprime_cdf(3.0, {8, 3}) == doctest::Approx(0.52559280395507813).epsilon(1e-13));
    CHECK(betaprime_cdf(0.1, {8, 3}) == doctest::Approx(1.7738846746652752e-7).epsilon(1e-12));
    CHECK(betaprime_cdf(10.0, {5, 3}) == doctest::Approx(0.9801320058206499).epsilon(1e-13));
    CHECK(betaprime_cdf(2.5, {1, 3}) == doctest::Approx(0.97667638483965015).epsilon(1e-13));
    CHECK(betaprime_cdf(1e3, {1, 1}) == doctest::Approx(1000.0 / 1001.0).epsilon(1e-14));
    CHECK(betaprime_sf(30.0, {8, 3}) == doctest::Approx(0.0033964017897130087).epsilon(1e-12));
    CHECK(ln_betaprime_cdf(1e-3, {16, 8}) == doctest::Approx(std::log(2.3968417785893177e-43)).epsilon(1e-12));
    CHECK(betaprime_cdf(0.0, {8, 3}) == 0.0);
    CHECK_THROWS_AS(betaprime_cdf(-1.0, {8, 3}), DomainError);
}

TEST_CASE("finite-sum and incomplete-Beta forms agree")
{
    for (int a = 1; a <= 16; a += 3)
        for (int b = 1; b <= 8; b += 2)
            for (double g : {1e-3, 0.05, 1.0, 7.0, 300.0})
                CHECK(betaprime_cdf_finite_sum(g, {a, b}) == doctest::Approx(betaprime_cdf(g, {a, b})).epsilon(1e-10).scale(1.0));
}

TEST_CASE("pdf integrates to the CDF")
{
    const BetaPrimeParams p{5, 3};
    double sum = 0.0;
    const int n = 20000;
    const double h = 2.0 / n;
    for (int i = 0; i < n; ++i)
        sum += betaprime_pdf((i + 0.5) * h, p) * h;
    CHECK(sum == doctest::Approx(betaprime_cdf(2.0, p)).epsilon(1e-6));
    CHECK(betaprime_pdf(0.0, {1, 3}) == 3.0);
    CHECK(betaprime_pdf(0.0, {2, 3}) == 0.0);
}

TEST_CASE("correlation approximations")
{
    CHECK(rho_u_approx(1.0, 1.0, 8, 3) == doctest::Approx(8.0 / 11.0));
    CHECK(rho_x_approx(1.0, 1.0, 8, 3) == doctest::Approx(2.0 / 11.0));
    CHECK(rho_u_approx(0.5, 1.0, 5, 3) == doctest::Approx(0.25 * 5.0 / 8.0));
    CHECK(rho_x_approx(0.0, 0.9, 8, 3) == 0.0);
}

TEST_CASE("outage envelope")
{
    const auto e = outage_envelope(1.0, {8, 3}, 8);
    const double F = 0.0546875;
    CHECK(e.upper == doctest::Approx(F));
    CHECK(e.lower == 0.0);
    CHECK(e.iid_benchmark == doctest::Approx(std::pow(F, 8)));
    CHECK(e.large_n_approx == doctest::Approx(std::exp(-8.0 * (1.0 - F))));
    CHECK_FALSE(e.large_n_in_regime);

    const auto one = outage_envelope(3.0, {8, 3}, 1);
    CHECK(one.upper == one.lower);
    CHECK(one.upper == one.iid_benchmark);

    const auto hi = outage_envelope_from_cdf(0.999, 8);
    CHECK(hi.lower == doctest::Approx(1.0 - 8 * 0.001));
    CHECK(hi.large_n_in_regime);
    CHECK(hi.lower <= hi.iid_benchmark);
    CHECK(hi.iid_benchmark <= hi.upper);
}

TEST_CASE("asymptotes")
{
    CHECK(asymptote_small_gamma(1.0, {8, 3}) == doctest::Approx(45.0));
    CHECK(asymptote_small_gamma(1.0, Scheme::ZF, 8, 4) == doctest::Approx(21.0));
    CHECK(asymptote_tail(100.0, {8, 3}) == doctest::Approx(1.2e-4).epsilon(1e-12));
    CHECK(asymptote_large_m(0.5, Scheme::MRT, 8, 4) == doctest::Approx(64.0 / 2.0 * std::pow(0.5, 8)));
    CHECK_THROWS_AS(asymptote_large_m(1.5, Scheme::MRT, 8, 4), DomainError);
    CHECK(diversity_orders(Scheme::MRT, 8, 4, 8) == 64);
    CHECK(diversity_orders(Scheme::ZF, 8, 4, 8) == 40);
}
