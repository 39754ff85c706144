"""Smoke tests for the python bindings."""

import math

import pytest

import resummap as r


def test_fixed_point_and_cycles():
    assert r.nonperiodic_fixed_point(0.0) == pytest.approx(2.0 / 3.0)
    c = r.two_cycle(0.05)
    assert c.period == 2
    assert c.multiplier == pytest.approx(1.0 - 0.05 * 4.05)
    c4 = r.four_cycle(0.51)
    assert len(c4.points) == 4
    assert abs(c4.multiplier) < 1.0


def test_orbits():
    ys = r.iterate_static(0.05, n_steps=100)
    assert len(ys) == 101
    assert all(0.0 <= y <= 1.0 for y in ys)
    yd = r.iterate_dynamic(0.012**2, n_steps=50)
    assert len(yd) == 51


def test_sigma_series():
    assert r.sigma0_coefficients(2) == [(-1, 9), (4, 81), (-19, 648)]
    (s0, _), (s1, _) = r.sigma1_coefficients(1)
    assert s0 == pytest.approx(0.5723, abs=1e-4)
    assert s1 == pytest.approx(-1.7439, abs=1e-4)


def test_approximations_track_the_map():
    assert r.r2_app(0.0, 0.05) == pytest.approx(2.0 / 3.0, abs=1e-5)
    ys = r.iterate_static(0.05, n_steps=400)
    errs = [abs(ys[n] - r.r2_app(0.05 * n, 0.05)) for n in range(401)]
    assert max(errs) < 1e-3
    assert r.r_app_dynamic(0.0, 0.001) == pytest.approx(2.0 / 3.0)


def test_weights_and_onset():
    assert abs(r.find_z0() - 0.9951) < 5e-4
    assert r.onset_index(0.012**2) == 3455
    grid = [0.01 + 0.005 * i for i in range(119)]
    p = r.profile_f4(grid)
    assert abs(p.poles[0] - (math.sqrt(5) - 2)) < 1e-12
    assert r.classify_region(p, 0.51) == r.Region.R3
    assert r.periodicity_of(-1.5 * math.pi) == 4


def test_landmarks():
    l = r.landmarks(0.001)
    assert l.n1 == 31
    assert l.n1 < l.n2 < l.n3


def test_errors_surface_as_exceptions():
    with pytest.raises(r.ResummapError):
        r.iterate_static(2.0, n_steps=10)  # lambda > 4
    with pytest.raises(r.ResummapError):
        r.r4_app(0.0, 0.3)  # below the 4-periodic regime
