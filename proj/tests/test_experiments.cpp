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

#include "fama/experiments.hpp"

#include <doctest.h>

#include <cmath>

using namespace fama;
using namespace fama::mc;

TEST_CASE("marginal CDF experiment fits its law")
{
    SystemConfig c;
    c.realizations = 200000;
    const auto r = run_cdf_experiment(c, CdfMode::marginal);
    CHECK(r.params.a == 8);
    CHECK(r.ks < 0.006);
    CHECK(r.counters.realizations == 200000);
}

TEST_CASE("physical ZF reference SIR fits its law")
{
    SystemConfig c;
    c.scheme = Scheme::ZF;
    c.realizations = 50000;
    const auto r = run_cdf_experiment(c, CdfMode::physical_reference);
    CHECK(r.ks < 0.015);
}

TEST_CASE("experiments are invariant to the worker count")
{
    SystemConfig c;
    c.W = 2.0;
    c.realizations = 12000;
    ExperimentOptions one{1, 1000}, four{4, 1000};
    const auto a = run_outage_experiment(c, default_sir_grid(), {}, one);
    const auto b = run_outage_experiment(c, default_sir_grid(), {}, four);
    CHECK(a.correlated == b.correlated);
    CHECK(a.iid == b.iid);
    const auto ca = run_correlation_experiment(c, {}, one);
    const auto cb = run_correlation_experiment(c, {}, four);
    CHECK(ca.physical.rho == cb.physical.rho);
}

TEST_CASE("surrogate correlation at mu = 1")
{
    const std::vector<double> mu{1.0, 1.0};
    const auto r = surrogate_gain_correlation(mu, 8, 3, 200000, 4);
    CHECK(r.rho(0, 1) == doctest::Approx(8.0 / 11.0).epsilon(0.02));
}

TEST_CASE("correlation experiment port set")
{
    SystemConfig c;
    c.scheme = Scheme::ZF;
    c.W = 4.0;
    c.realizations = 5000;
    CorrelationOptions opt;
    opt.include_reference = true;
    const auto r = run_correlation_experiment(c, opt);
    CHECK_FALSE(r.reference_included);
    CHECK(r.physical.ports.front() == 1);
    CHECK(r.physical.excluded == std::vector<std::size_t>{0});
}

TEST_CASE("correlated outage stays below the single-port law when selection includes the reference")
{
    SystemConfig c;
    c.W = 4.0;
    c.realizations = 20000;
    OutageOptions o;
    o.with_iid_benchmark = false;
    const auto r = run_outage_experiment(c, default_sir_grid(), o);
    for (std::size_t i = 0; i < r.gamma.size(); ++i)
        CHECK(r.correlated[i] <= r.marginal_upper[i] + 1e-15);
}

TEST_CASE("member-mode ZF outage is zero")
{
    SystemConfig c;
    c.scheme = Scheme::ZF;
    c.realizations = 2000;
    const auto r = run_outage_experiment(c, {0.1, 10.0, 1000.0});
    for (double p : r.correlated)
        CHECK(p == 0.0);
    CHECK(r.counters.infinite_sir > 0);
}
