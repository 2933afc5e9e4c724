"""Smoke tests for the python bindings."""

import math

import pytest

import trialsig as ts


def test_significance_golden():
    p = ts.significance(q=154 / 162, m=162, q0=0.95)
    assert abs(p - 0.429) < 0.005
    assert ts.significance(q=154 / 162, m=162, q0=0.0) == 1.0


def test_significance_matches_quadrature():
    p = ts.significance(0.61, 35, 0.5)
    q = ts.significance_quadrature(0.61, 35, 0.5)
    assert abs(p - q) < 1e-9


def test_sample_size():
    r = ts.required_trials(0.61, 0.5, 0.9)
    assert r.m_int == 35
    assert abs(r.m_real - 34.809) < 0.01
    with pytest.raises(ts.NoSolutionError):
        ts.required_trials(0.5, 0.5, 0.9)


def test_superiority_paths_agree():
    exact = ts.superiority_exact(0.6, 0.4, 10, 10)
    quad = ts.superiority(0.6, 0.4, 10, 10)
    assert abs(exact - quad) < 1e-8
    assert abs(ts.superiority(0.5, 0.5, 7, 7) - 0.5) < 1e-6


def test_curve_is_monotone():
    pts = ts.significance_curve(0.7, 40, [0.0, 0.25, 0.5, 0.75, 1.0])
    ps = [p for _, p in pts]
    assert ps[0] == 1.0
    assert ps[-1] == 0.0
    assert all(a >= b for a, b in zip(ps, ps[1:]))


def test_mean_sampling_distribution():
    base = ts.DiscreteDistribution(0.0, 1.0, [1 / 37.0] * 37)
    rolled = ts.mean_sampling_distribution(base, 1000)
    assert abs(rolled.mean() - 18.0) < 1e-9
    assert abs(math.sqrt(rolled.variance()) - math.sqrt(114.0 / 1000.0)) < 1e-9


def test_truncated_fit_round_trip():
    m, s = ts.truncated_moments(1.0, 1.0)
    mu, sigma = ts.fit_truncated_gaussian(m, s)
    assert abs(mu - 1.0) < 1e-6
    assert abs(sigma - 1.0) < 1e-6
    assert sigma > s  # truncation shrinks the observable spread


def test_mc_is_deterministic_and_concordant():
    a = ts.mc_significance(0.61, 35, 0.5, seed=7, draws=100000)
    b = ts.mc_significance(0.61, 35, 0.5, seed=7, draws=100000, threads=4)
    assert a.value == b.value
    analytic = ts.significance(0.61, 35, 0.5)
    assert abs(a.value - analytic) <= 3 * a.std_err


def test_gaussian_superiority():
    assert ts.superiority_gaussian(0.0, 1.0, 0.0, 1.0) == 0.5
    closed = ts.superiority_gaussian(0.0, 1.0, 1.0, 1.0)
    quad = ts.superiority_gaussian_quadrature(0.0, 1.0, 1.0, 1.0)
    assert abs(closed - quad) < 1e-10
