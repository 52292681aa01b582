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

#include "fama/special_functions.hpp"

#include "fama/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fama::special {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kCfEps = 1e-16;
constexpr int kCfMaxIter = 20000;

void require_positive(double v, const char *name)
{
    if (!std::isfinite(v) || v <= 0.0)
        throw DomainError(std::string(name) + " must be a positive finite number");
}

// Continued fraction for the incomplete Beta function (modified Lentz).
double beta_continued_fraction(double x, double a, double b)
{
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kCfMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kCfEps)
            return h;
    }
    throw DomainError("incomplete Beta continued fraction did not converge");
}

double j0_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18)
            break;
    }
    return sum;
}

// Miller's backward recurrence, normalized by J0 + 2*sum_k J_2k = 1.
double j0_backward_recurrence(double x)
{
    const double ax = std::abs(x);
    int start = static_cast<int>(ax + 30.0 + 12.0 * std::cbrt(ax));
    start += start % 2;
    const double two_over_x = 2.0 / ax;
    double j_next = 0.0;
    double j = 1e-30;
    double even_sum = 0.0;
    for (int k = start; k >= 1; --k) {
        const double j_prev = k * two_over_x * j - j_next;
        j_next = j;
        j = j_prev;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            j_next *= 1e-250;
            even_sum *= 1e-250;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0)
            even_sum += 2.0 * j;
    }
    return j / (j + even_sum);
}

} // namespace

double ln_gamma(double x)
{
    require_positive(x, "ln_gamma argument");
    return std::lgamma(x);
}

double ln_beta(double a, double b)
{
    require_positive(a, "Beta parameter a");
    require_positive(b, "Beta parameter b");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_fn(double a, double b) { return std::exp(ln_beta(a, b)); }

IncBetaPair inc_beta_pair(double y, double y_complement, double a, double b)
{
    require_positive(a, "incomplete Beta parameter a");
    require_positive(b, "incomplete Beta parameter b");
    if (!(y >= 0.0 && y <= 1.0) || !(y_complement >= 0.0 && y_complement <= 1.0))
        throw DomainError("incomplete Beta argument must lie in [0, 1]");

    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    if (y == 0.0)
        return {0.0, 1.0, neg_inf, 0.0};
    if (y_complement == 0.0)
        return {1.0, 0.0, 0.0, neg_inf};

    const double ln_front = a * std::log(y) + b * std::log(y_complement) - ln_beta(a, b);
    IncBetaPair r{};
    if (y < (a + 1.0) / (a + b + 2.0)) {
        r.ln_lower = ln_front + std::log(beta_continued_fraction(y, a, b)) - std::log(a);
        r.lower = std::exp(r.ln_lower);
        r.upper = 1.0 - r.lower;
        r.ln_upper = std::log1p(-r.lower);
    } else {
        r.ln_upper = ln_front + std::log(beta_continued_fraction(y_complement, b, a)) - std::log(b);
        r.upper = std::exp(r.ln_upper);
        r.lower = 1.0 - r.upper;
        r.ln_lower = std::log1p(-r.upper);
    }
    return r;
}

double reg_inc_beta(double y, double a, double b)
{
    if (!(y >= 0.0 && y <= 1.0))
        throw DomainError("incomplete Beta argument must lie in [0, 1]");
    return inc_beta_pair(y, 1.0 - y, a, b).lower;
}

double ln_reg_inc_beta_tail(double y, double a, double b)
{
    if (!(y >= 0.0 && y <= 1.0))
        throw DomainError("incomplete Beta argument must lie in [0, 1]");
    return inc_beta_pair(y, 1.0 - y, a, b).ln_lower;
}

double bessel_j0(double x)
{
    if (!std::isfinite(x))
        throw DomainError("bessel_j0 argument must be finite");
    const double ax = std::abs(x);
    if (ax <= 8.0)
        return j0_series(ax);
    return j0_backward_recurrence(ax);
}

double ln_binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("ln_binomial requires 0 <= k <= n");
    const std::int64_t kk = std::min(k, n - k);
    if (kk == 0)
        return 0.0;
    if (kk <= 64) {
        // ln prod_{i=1}^{kk} (n-kk+i)/i, free of the lgamma cancellation
        const double base = static_cast<double>(n - kk);
        double s = 0.0;
        for (std::int64_t i = 1; i <= kk; ++i)
            s += std::log1p(base / static_cast<double>(i));
        return s;
    }
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

std::vector<double> log_grid(RealInterval range, std::size_t n)
{
    if (!(range.lo > 0.0) || !(range.hi >= range.lo))
        throw DomainError("log_grid requires 0 < lo <= hi");
    if (n == 0)
        return {};
    std::vector<double> grid(n);
    if (n == 1) {
        grid[0] = range.lo;
        return grid;
    }
    const double l0 = std::log10(range.lo);
    const double l1 = std::log10(range.hi);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = std::pow(10.0, l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1));
    grid.front() = range.lo;
    grid.back() = range.hi;
    return grid;
}

} // namespace fama::special
