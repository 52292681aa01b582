# SPDX-License-Identifier: Apache-2.0
"""Fluid-antenna multiple access SIR statistics and Monte-Carlo experiments."""

from ._core import (
    BetaPrimeParams,
    ConfigError,
    DomainError,
    ReferenceMode,
    Scheme,
    SingularGramError,
    SystemConfig,
    __version__,
    asymptote_large_m,
    asymptote_small_gamma,
    asymptote_tail,
    bessel_j0,
    betaprime_cdf,
    betaprime_cdf_finite_sum,
    betaprime_pdf,
    betaprime_sf,
    diversity_order,
    outage_envelope,
    parse_config,
    reg_inc_beta,
    rho_u_approx,
    rho_x_approx,
    run_acceptance_criterion,
    run_cdf_experiment,
    run_command,
    run_correlation_experiment,
    run_outage_experiment,
    sir_params,
)

__all__ = [name for name in dir() if not name.startswith("_")]
