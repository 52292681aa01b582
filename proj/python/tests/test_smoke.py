# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import fama_lab as fl


def test_version():
    assert fl.__version__ == "0.1.0"


def test_closed_forms():
    p = fl.sir_params(fl.Scheme.MRT, 8, 4)
    assert (p.a, p.b) == (8, 3)
    assert fl.betaprime_cdf(1.0, p) == pytest.approx(0.0546875, rel=1e-12)
    assert fl.betaprime_cdf(1.0, fl.BetaPrimeParams(5, 3)) == pytest.approx(29 / 128, rel=1e-12)
    assert fl.betaprime_cdf_finite_sum(3.0, p) == pytest.approx(fl.betaprime_cdf(3.0, p), abs=1e-12)
    assert fl.asymptote_tail(100.0, p) == pytest.approx(1.2e-4, rel=1e-12)
    assert fl.asymptote_small_gamma(1.0, p) == pytest.approx(45.0)
    assert fl.rho_u_approx(1.0, 1.0, 8, 3) == pytest.approx(8 / 11)
    assert fl.bessel_j0(math.pi) == pytest.approx(-0.30424217764409386, rel=1e-12)
    env = fl.outage_envelope(1.0, p, 1)
    assert env["upper"] == env["lower"] == env["iid_benchmark"]


def test_errors():
    with pytest.raises(ValueError):
        fl.BetaPrimeParams(0, 3)
    with pytest.raises(fl.ConfigError):
        fl.parse_config("scheme = ZF\nM = 3\n")
    with pytest.raises(ValueError):
        fl.betaprime_cdf(-1.0, fl.BetaPrimeParams(8, 3))


def test_config_defaults():
    c = fl.parse_config()
    assert (c.M, c.U, c.N, c.W, c.scheme) == (8, 4, 8, 0.25, fl.Scheme.MRT)


def test_marginal_experiment():
    c = fl.SystemConfig()
    c.realizations = 50000
    r = fl.run_cdf_experiment(c, "marginal")
    assert len(r["gamma"]) == 200
    assert r["ks"] < 0.012


def test_correlation_and_outage():
    c = fl.SystemConfig()
    c.W = 4.0
    c.realizations = 5000
    corr = fl.run_correlation_experiment(c)
    assert corr["rho_x"].shape == (7, 7)
    out = fl.run_outage_experiment(c, [0.5, 2.0, 8.0])
    assert len(out["correlated"]) == 3
    assert all(0.0 <= v <= 1.0 for v in out["correlated"])


def test_run_command_is_worker_invariant():
    text = "realizations = 3000\nchunk_size = 500\n"
    a, ok, _ = fl.run_command("fig4", text, workers=1)
    b, _, _ = fl.run_command("fig4", text, workers=3)
    assert ok
    assert a["fig4_mrt.csv"] == b["fig4_mrt.csv"]
    assert a["fig4_mrt.csv"].splitlines()[0] == "gamma,gamma_db,value,ci_low,ci_high,curve_id"


def test_acceptance_criterion_runs():
    passed, line = fl.run_acceptance_criterion(1)
    assert passed
    assert line.startswith("PASS  #1")
