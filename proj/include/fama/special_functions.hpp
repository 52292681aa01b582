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

#ifndef FAMA_SPECIAL_FUNCTIONS_HPP
#define FAMA_SPECIAL_FUNCTIONS_HPP

#include <cstdint>
#include <vector>

namespace fama::special {

// Closed interval used for evaluation grids.
struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Natural log of the Gamma function, x > 0.
double ln_gamma(double x);

// Beta function B(a,b) = exp(lnG(a) + lnG(b) - lnG(a+b)).
double beta_fn(double a, double b);
double ln_beta(double a, double b);

// Regularized incomplete Beta function I_y(a,b), 0 <= y <= 1.
//
// Evaluated with the Lentz continued fraction, switching to the complement
// I_y(a,b) = 1 - I_{1-y}(b,a) when y > (a+1)/(a+b+2).
double reg_inc_beta(double y, double a, double b);

// ln I_y(a,b), accurate when I_y(a,b) underflows double precision.
// Returns -inf for y == 0.
double ln_reg_inc_beta_tail(double y, double a, double b);

// Lower and upper regularized incomplete Beta values for a point given as
// the pair (y, 1-y). Passing the complement explicitly avoids cancellation
// when y is within rounding of 1 (e.g. y = g/(1+g) for large g).
struct IncBetaPair {
    double lower;     // I_y(a,b)
    double upper;     // 1 - I_y(a,b) = I_{1-y}(b,a)
    double ln_lower;  // ln I_y(a,b)
    double ln_upper;  // ln (1 - I_y(a,b))
};
IncBetaPair inc_beta_pair(double y, double y_complement, double a, double b);

// Bessel function of the first kind, order zero.
double bessel_j0(double x);

// ln C(n,k), 0 <= k <= n.
double ln_binomial(std::int64_t n, std::int64_t k);

// n points spaced uniformly in log10 over [lo, hi], both endpoints included.
std::vector<double> log_grid(RealInterval range, std::size_t n);

} // namespace fama::special

#endif
