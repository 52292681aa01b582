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

#include "fama/error.hpp"
#include "fama/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fama;
using namespace fama::special;

TEST_CASE("ln_gamma reference values and recurrence")
{
    CHECK(ln_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-14));
    CHECK(ln_gamma(3.7) == doctest::Approx(1.4280723266653881).epsilon(1e-14));
    CHECK(ln_gamma(50.0) == doctest::Approx(144.56574394634489).epsilon(1e-14));
    CHECK(ln_gamma(1e-3) == doctest::Approx(6.9071788853838537).epsilon(1e-14));
    for (double x : {0.3, 1.5, 7.25, 41.0})
        CHECK(ln_gamma(x + 1.0) - ln_gamma(x) == doctest::Approx(std::log(x)).epsilon(1e-12));
    CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
}

TEST_CASE("beta function")
{
    CHECK(beta_fn(8, 3) == doctest::Approx(1.0 / 360.0).epsilon(1e-14));
    CHECK(ln_beta(2.5, 4.0) == doctest::Approx(ln_beta(4.0, 2.5)).epsilon(1e-15));
}

TEST_CASE("regularized incomplete beta")
{
    CHECK(reg_inc_beta(0.5, 8, 3) == doctest::Approx(0.0546875).epsilon(1e-14));
    CHECK(reg_inc_beta(0.3, 2.5, 4.0) == doctest::Approx(0.35219758590676721).epsilon(1e-13));
    CHECK(reg_inc_beta(0.01, 3, 7) == doctest::Approx(8.0294765381128005e-5).epsilon(1e-12));
    CHECK(reg_inc_beta(0.7, 40, 2.5) == doctest::Approx(2.2676882706078891e-5).epsilon(1e-11));
    CHECK(reg_inc_beta(0.0, 2, 3) == 0.0);
    CHECK(reg_inc_beta(1.0, 2, 3) == 1.0);
    CHECK_THROWS_AS(reg_inc_beta(1.5, 2, 3), DomainError);
    CHECK_THROWS_AS(reg_inc_beta(0.5, 0, 3), DomainError);

    SUBCASE("symmetry I_y(a,b) = 1 - I_{1-y}(b,a)")
    {
        for (double y : {0.05, 0.3, 0.61, 0.97})
            for (double a : {1.0, 2.5, 9.0})
                for (double b : {1.0, 3.0, 7.5})
                    CHECK(reg_inc_beta(y, a, b) == doctest::Approx(1.0 - reg_inc_beta(1.0 - y, b, a)).epsilon(1e-12));
    }
}

TEST_CASE("complementary pair keeps tiny tails")
{
    const auto p = inc_beta_pair(0.999, 0.001, 16, 8);
    CHECK(p.upper == doctest::Approx(4.8381750457192453e-19).epsilon(1e-10));
    CHECK(p.ln_upper == doctest::Approx(std::log(4.8381750457192453e-19)).epsilon(1e-12));
    CHECK(p.lower + p.upper == doctest::Approx(1.0));
    CHECK(ln_reg_inc_beta_tail(0.001, 8, 16) == doctest::Approx(p.ln_upper).epsilon(1e-12));
}

TEST_CASE("bessel_j0 reference values")
{
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(std::numbers::pi) == doctest::Approx(-0.30424217764409386).epsilon(1e-13));
    CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-14));
    CHECK(bessel_j0(5.0) == doctest::Approx(-0.1775967713143383).epsilon(1e-13));
    CHECK(bessel_j0(8.0) == doctest::Approx(0.17165080713755391).epsilon(1e-12));
    CHECK(bessel_j0(8.5) == doctest::Approx(0.041939251842934504).epsilon(1e-11));
    CHECK(bessel_j0(10.0) == doctest::Approx(-0.24593576445134834).epsilon(1e-12));
    CHECK(bessel_j0(25.5) == doctest::Approx(0.14406215754684786).epsilon(1e-11));
    CHECK(bessel_j0(100.0) == doctest::Approx(0.019985850304223122).epsilon(1e-10));
    CHECK(bessel_j0(-5.0) == bessel_j0(5.0));
}

TEST_CASE("bessel_j0 matches a direct 60-term series on [0, 8]")
{
    for (double x = 0.0; x <= 8.0; x += 0.173) {
        double term = 1.0, sum = 1.0;
        const double q = x * x / 4.0;
        for (int k = 1; k < 60; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
        }
        CHECK(bessel_j0(x) == doctest::Approx(sum).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("ln_binomial")
{
    CHECK(ln_binomial(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(ln_binomial(60, 17) == doctest::Approx(33.590018458096068).epsilon(1e-13));
    CHECK(ln_binomial(1000, 400) == doctest::Approx(669.35214512554536).epsilon(1e-12));
    CHECK(ln_binomial(7, 0) == 0.0);
    CHECK_THROWS_AS(ln_binomial(3, 4), DomainError);
}

TEST_CASE("log_grid endpoints")
{
    const auto g = log_grid({1e-3, 1e3}, 200);
    REQUIRE(g.size() == 200);
    CHECK(g.front() == doctest::Approx(1e-3));
    CHECK(g.back() == doctest::Approx(1e3));
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] > g[i - 1]);
}
