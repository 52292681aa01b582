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
#include "fama/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fama::analytic {

namespace {

void require_threshold(double gamma)
{
    if (std::isnan(gamma) || gamma < 0.0)
        throw DomainError("SIR threshold must be >= 0");
}

void require_mu(double mu)
{
    if (!(std::abs(mu) <= 1.0))
        throw DomainError("correlation coefficient mu must lie in [-1, 1]");
}

void require_dims(int M_eff, int L)
{
    if (M_eff < 1 || L < 1)
        throw DomainError("M_eff and L must be >= 1");
}

} // namespace

void BetaPrimeParams::validate() const
{
    if (a < 1 || b < 1)
        throw DomainError("Beta-prime shapes must be integers >= 1");
}

BetaPrimeParams BetaPrimeParams::from_real(double a, double b)
{
    if (!(a >= 1.0) || !(b >= 1.0) || a != std::floor(a) || b != std::floor(b) || a > 1e6 || b > 1e6)
        throw DomainError("Beta-prime shapes must be integers >= 1");
    return {static_cast<int>(a), static_cast<int>(b)};
}

int m_eff(Scheme scheme, int M, int U)
{
    if (M < 1 || U < 1)
        throw DomainError("M and U must be >= 1");
    if (scheme == Scheme::MRT)
        return M;
    if (M < U)
        throw DomainError("ZF requires M >= U");
    return M - U + 1;
}

BetaPrimeParams sir_params(Scheme scheme, int M, int U)
{
    BetaPrimeParams p{m_eff(scheme, M, U), U - 1};
    p.validate();
    return p;
}

double betaprime_pdf(double x, BetaPrimeParams params)
{
    params.validate();
    if (std::isnan(x) || x < 0.0)
        throw DomainError("Beta-prime pdf argument must be >= 0");
    if (x == 0.0)
        return params.a == 1 ? static_cast<double>(params.b) : 0.0;
    if (std::isinf(x))
        return 0.0;
    const double a = params.a;
    const double b = params.b;
    return std::exp((a - 1.0) * std::log(x) - (a + b) * std::log1p(x) - special::ln_beta(a, b));
}

double betaprime_cdf(double gamma, BetaPrimeParams params)
{
    params.validate();
    require_threshold(gamma);
    if (std::isinf(gamma))
        return 1.0;
    return special::inc_beta_pair(gamma / (1.0 + gamma), 1.0 / (1.0 + gamma), params.a, params.b).lower;
}

double betaprime_sf(double gamma, BetaPrimeParams params)
{
    params.validate();
    require_threshold(gamma);
    if (std::isinf(gamma))
        return 0.0;
    return special::inc_beta_pair(gamma / (1.0 + gamma), 1.0 / (1.0 + gamma), params.a, params.b).upper;
}

double ln_betaprime_cdf(double gamma, BetaPrimeParams params)
{
    params.validate();
    require_threshold(gamma);
    if (std::isinf(gamma))
        return 0.0;
    return special::inc_beta_pair(gamma / (1.0 + gamma), 1.0 / (1.0 + gamma), params.a, params.b).ln_lower;
}

double betaprime_cdf_finite_sum(double gamma, BetaPrimeParams params)
{
    params.validate();
    require_threshold(gamma);
    if (gamma == 0.0)
        return 0.0;
    if (std::isinf(gamma))
        return 1.0;
    const int n = params.a + params.b - 1;
    const double ln_g = std::log(gamma);
    const double ln_scale = -static_cast<double>(n) * std::log1p(gamma);
    double tail = 0.0;
    for (int j = 0; j < params.a; ++j)
        tail += std::exp(special::ln_binomial(n, j) + j * ln_g + ln_scale);
    return std::clamp(1.0 - tail, 0.0, 1.0);
}

double rho_u_approx(double mu_k, double mu_l, int M_eff, int L)
{
    require_mu(mu_k);
    require_mu(mu_l);
    require_dims(M_eff, L);
    return mu_k * mu_k * mu_l * mu_l * static_cast<double>(M_eff) / static_cast<double>(M_eff + L);
}

double rho_x_approx(double mu_k, double mu_l, int M_eff, int L)
{
    return rho_u_approx(mu_k, mu_l, M_eff, L) * static_cast<double>(L) / static_cast<double>(L + M_eff + 1);
}

OutageEnvelope outage_envelope_from_cdf(double F, int N, double gamma)
{
    if (!(F >= 0.0 && F <= 1.0))
        throw DomainError("single-port CDF value must lie in [0, 1]");
    if (N < 1)
        throw DomainError("port count N must be >= 1");
    const double eps = 1.0 - F;
    const double n = static_cast<double>(N);
    OutageEnvelope e;
    e.gamma = gamma;
    e.single_port = F;
    e.upper = F;
    e.lower = std::max(0.0, 1.0 - n * eps);
    e.iid_benchmark = F == 0.0 ? 0.0 : std::exp(n * std::log(F));
    e.large_n_approx = std::exp(-n * eps);
    e.large_n_in_regime = n * eps <= kLargeNRegime;
    if (N == 1)
        e.lower = e.iid_benchmark = F;
    return e;
}

OutageEnvelope outage_envelope(double gamma, BetaPrimeParams params, int N)
{
    if (!(gamma > 0.0))
        throw DomainError("outage threshold must be > 0");
    params.validate();
    if (N < 1)
        throw DomainError("port count N must be >= 1");
    const auto pair = special::inc_beta_pair(gamma / (1.0 + gamma), 1.0 / (1.0 + gamma), params.a, params.b);
    const double n = static_cast<double>(N);
    OutageEnvelope e;
    e.gamma = gamma;
    e.single_port = pair.lower;
    e.upper = pair.lower;
    e.lower = std::max(0.0, 1.0 - n * pair.upper);
    e.iid_benchmark = std::exp(n * pair.ln_lower);
    e.large_n_approx = std::exp(-n * pair.upper);
    e.large_n_in_regime = n * pair.upper <= kLargeNRegime;
    if (N == 1)
        e.lower = e.iid_benchmark = pair.lower;
    return e;
}

double asymptote_small_gamma(double gamma, BetaPrimeParams params)
{
    params.validate();
    if (!(gamma > 0.0))
        throw DomainError("asymptote threshold must be > 0");
    const double a = params.a;
    const double b = params.b;
    return std::exp(a * std::log(gamma) + std::lgamma(a + b) - std::lgamma(b) - std::lgamma(a + 1.0));
}

double asymptote_small_gamma(double gamma, Scheme scheme, int M, int U)
{
    return asymptote_small_gamma(gamma, sir_params(scheme, M, U));
}

double asymptote_large_m(double gamma, Scheme scheme, int M, int U)
{
    if (!(gamma > 0.0 && gamma < 1.0))
        throw DomainError("large-M expansion holds only for 0 < gamma < 1");
    const auto p = sir_params(scheme, M, U);
    const double a = p.a;
    const double b = p.b;
    return std::exp((b - 1.0) * std::log(a) + a * std::log(gamma) - std::lgamma(b));
}

double asymptote_tail(double gamma, BetaPrimeParams params)
{
    params.validate();
    if (!(gamma > 0.0))
        throw DomainError("tail threshold must be > 0");
    const double b = params.b;
    return std::exp(-b * std::log(gamma) - std::log(b) - special::ln_beta(params.a, b));
}

int diversity_orders(Scheme scheme, int M, int U, int N)
{
    if (N < 1)
        throw DomainError("port count N must be >= 1");
    return m_eff(scheme, M, U) * N;
}

} // namespace fama::analytic
