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

#ifndef FAMA_ANALYTIC_HPP
#define FAMA_ANALYTIC_HPP

#include "fama/channel.hpp"

namespace fama::analytic {

// Shape pair of the per-port SIR law: X = G_a / G_b with independent
// G_a ~ Gamma(a,1), G_b ~ Gamma(b,1). a is the effective signal dimension,
// b = U - 1 the number of interfering streams.
struct BetaPrimeParams {
    int a = 1;
    int b = 1;

    void validate() const;
    // Rejects non-integer or non-positive shapes.
    static BetaPrimeParams from_real(double a, double b);
};

// M for MRT, M-U+1 for ZF.
int m_eff(Scheme scheme, int M, int U);

// (m_eff, U-1).
BetaPrimeParams sir_params(Scheme scheme, int M, int U);

double betaprime_pdf(double x, BetaPrimeParams params);

// F(g) = I_{g/(1+g)}(a,b).
double betaprime_cdf(double gamma, BetaPrimeParams params);
// 1 - F(g), evaluated without cancellation.
double betaprime_sf(double gamma, BetaPrimeParams params);
// ln F(g); finite far below the double underflow threshold.
double ln_betaprime_cdf(double gamma, BetaPrimeParams params);

// 1 - (1+g)^{-(a+b-1)} sum_{j<a} C(a+b-1, j) g^j, each term in log-space.
double betaprime_cdf_finite_sum(double gamma, BetaPrimeParams params);

// Cross-port desired-gain correlation mu_k^2 mu_l^2 M_eff / (M_eff + L).
//
// The approximation targets distinct ports; at k == l it does not
// reproduce corr(U_k, U_k) = 1.
double rho_u_approx(double mu_k, double mu_l, int M_eff, int L);

// Cross-port SIR correlation rho_u * L / (L + M_eff + 1). Same caveat as
// rho_u_approx for k == l.
double rho_x_approx(double mu_k, double mu_l, int M_eff, int L);

// Outage quantities at one threshold for selection over N identically
// distributed ports.
struct OutageEnvelope {
    double gamma = 0.0;
    double single_port = 0.0;    // F
    double upper = 0.0;          // F
    double lower = 0.0;          // max(0, 1 - N (1 - F))
    double iid_benchmark = 0.0;  // F^N
    double large_n_approx = 0.0; // exp(-N (1 - F))
    // N (1 - F) <= kLargeNRegime: the exponential form is in its regime.
    bool large_n_in_regime = false;
};

inline constexpr double kLargeNRegime = 0.1;

OutageEnvelope outage_envelope(double gamma, BetaPrimeParams params, int N);

// Same envelope from a known single-port CDF value F.
OutageEnvelope outage_envelope_from_cdf(double F, int N, double gamma = 0.0);

// g^{M_eff} Gamma(L+M_eff) / (Gamma(L) Gamma(M_eff+1)), the g -> 0 law.
double asymptote_small_gamma(double gamma, Scheme scheme, int M, int U);
double asymptote_small_gamma(double gamma, BetaPrimeParams params);

// M_eff^{L-1} / Gamma(L) * g^{M_eff}, the large-array law; needs 0 < g < 1.
double asymptote_large_m(double gamma, Scheme scheme, int M, int U);

// 1 - F(g) ~ g^{-b} / (b B(a,b)) as g -> infinity.
double asymptote_tail(double gamma, BetaPrimeParams params);

// Selection-diversity order M_eff * N.
int diversity_orders(Scheme scheme, int M, int U, int N);

} // namespace fama::analytic

#endif
