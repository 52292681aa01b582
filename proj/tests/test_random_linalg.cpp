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
#include "fama/linalg.hpp"
#include "fama/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace fama;

TEST_CASE("streams are reproducible and distinct")
{
    RngStream a(7, 1), b(7, 1), c(7, 2), d(8, 1);
    const double x = a.normal();
    CHECK(x == b.normal());
    CHECK(x != c.normal());
    CHECK(x != d.normal());
}

TEST_CASE("complex Gaussian has unit power")
{
    RngStream s(3, 0);
    const auto v = sample_cgauss_vec(s, 200000);
    CHECK(v.squaredNorm() / 200000.0 == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(v.mean()) < 0.01);
}

TEST_CASE("integer-shape gamma sampler")
{
    RngStream s(11, 0);
    const int n = 200000;
    int below = 0;
    double big = 0.0;
    for (int i = 0; i < n; ++i) {
        below += sample_gamma_int(s, 3) < 3.0 ? 1 : 0;
        big += sample_gamma_int(s, 40);
    }
    // P(Gamma(3,1) < 3) = 1 - 8.5 e^{-3}
    CHECK(below / static_cast<double>(n) == doctest::Approx(0.57680991887315648).epsilon(0.01));
    CHECK(big / n == doctest::Approx(40.0).epsilon(0.005));
    CHECK_THROWS_AS(sample_gamma_int(s, 0), DomainError);
}

TEST_CASE("hermitian inner product conjugates the first argument")
{
    ComplexVector x(2), y(2);
    x << std::complex<double>(0, 1), 1.0;
    y << 1.0, 1.0;
    CHECK(hermitian_inner(x, y) == std::complex<double>(1.0, -1.0));
    CHECK_THROWS_AS(hermitian_inner(x, ComplexVector(3)), DomainError);
}

TEST_CASE("solve_gram returns H (H^H H)^{-1}")
{
    RngStream s(5, 0);
    ComplexMatrix H(8, 4);
    fill_cgauss(s, H.leftCols(4));
    const auto X = solve_gram(H);
    const ComplexMatrix I = H.adjoint() * X;
    CHECK((I - ComplexMatrix::Identity(4, 4)).norm() < 1e-12);

    ComplexMatrix R(4, 3);
    fill_cgauss(s, R.leftCols(3));
    R.col(2) = R.col(0) * 2.0;
    CHECK_THROWS_AS(solve_gram(R), SingularGramError);
}
