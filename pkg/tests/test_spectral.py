"""Transforms and diagonal multiplier operators."""

import numpy as np
import pytest

from metapulse import (
    DrudeParams,
    GridMismatchError,
    InadmissibleGridError,
    Multiplier,
    Signal,
    TimeGrid,
    apply,
    from_spectrum,
    make_multiplier,
    to_spectrum,
)
from conftest import random_zero_mean


def test_grid_validation():
    with pytest.raises(ValueError):
        TimeGrid(100, 0.1)  # not a power of two
    with pytest.raises(ValueError):
        TimeGrid(4, 0.1)
    with pytest.raises(ValueError):
        TimeGrid(64, 0.0)
    g = TimeGrid(64, 0.25)
    assert g.window == pytest.approx(16.0)
    # signed bins symmetric about zero except the unpaired Nyquist
    w = np.sort(g.omegas)
    assert np.allclose(w[1:32] + w[:32:-1], 0.0)


def test_signal_validation(grid):
    with pytest.raises(ValueError):
        Signal(grid, np.zeros(grid.n - 1))
    with pytest.raises(ValueError):
        Signal(grid, np.full(grid.n, np.nan))


def test_transform_round_trip(grid, rng):
    for _ in range(10):
        s = random_zero_mean(grid, rng)
        back = from_spectrum(to_spectrum(s))
        assert np.max(np.abs(back.samples - s.samples)) <= 1e-12 * s.peak


def test_transform_special_signals(grid):
    const = Signal(grid, np.full(grid.n, 2.5))
    spec = to_spectrum(const).values
    assert np.max(np.abs(spec[1:])) < 1e-12 * np.abs(spec[0])

    k = 17
    wk = grid.omegas[k]
    cos = Signal(grid, np.cos(wk * grid.times))
    cspec = to_spectrum(cos).values
    mask = np.zeros(grid.n, dtype=bool)
    mask[[k, grid.n - k]] = True
    assert np.max(np.abs(cspec[~mask])) < 1e-10 * np.max(np.abs(cspec))


def test_parseval(grid, rng):
    s = random_zero_mean(grid, rng)
    e_time = np.sum(s.samples**2)
    e_freq = np.sum(np.abs(to_spectrum(s).values) ** 2)
    assert e_freq == pytest.approx(e_time, rel=1e-10)


def test_d_dt_on_sine(unit_params, grid):
    k = 25
    wk = grid.omegas[k]
    d_dt = make_multiplier("d_dt", unit_params, grid)
    out = apply(d_dt, Signal(grid, np.sin(wk * grid.times)))
    np.testing.assert_allclose(
        out.samples, wk * np.cos(wk * grid.times), atol=1e-10 * wk
    )


def test_d_dt_inverse_pair(unit_params, grid, rng):
    d_dt = make_multiplier("d_dt", unit_params, grid)
    d_dt_inv = make_multiplier("d_dt_inv", unit_params, grid)
    s = random_zero_mean(grid, rng)
    for first, second in ((d_dt, d_dt_inv), (d_dt_inv, d_dt)):
        out = apply(second, apply(first, s))
        assert np.max(np.abs(out.samples - s.samples)) <= 1e-10 * s.peak


def test_a_multiplier_value():
    # grid engineered so that w = 0.5 falls exactly on bin 16
    grid = TimeGrid(256, 2.0 * np.pi / (256 * 0.03125))
    params = DrudeParams(1.0, 1.0, c=1.0, eps0=1.0, mu0=1.0)
    vals = make_multiplier("a", params, grid).values
    k = int(np.argmin(np.abs(grid.omegas - 0.5)))
    assert grid.omegas[k] == pytest.approx(0.5, rel=1e-12)
    assert vals[k].real == pytest.approx(-3.0)
    assert vals[0] == 0.0


def test_all_kinds_annihilate_dc(unit_params, grid):
    for kind in ("eps", "mu", "mu_inv", "a", "a_inv", "a_sq", "d_dt", "d_dt_inv"):
        m = make_multiplier(kind, unit_params, grid)
        assert m.values[0] == 0.0
        assert m.hermitian


def test_apply_identity_and_mismatch(unit_params, grid, rng):
    s = random_zero_mean(grid, rng)
    ident = Multiplier(grid, np.ones(grid.n))
    out = apply(ident, s)
    np.testing.assert_allclose(out.samples, s.samples, atol=1e-13)
    with pytest.raises(GridMismatchError):
        apply(ident, random_zero_mean(TimeGrid(grid.n, 2 * grid.dt), rng))


def test_a_squared_is_a_twice(unit_params, grid, rng):
    a = make_multiplier("a", unit_params, grid)
    a_sq = make_multiplier("a_sq", unit_params, grid)
    s = random_zero_mean(grid, rng)
    twice = apply(a, apply(a, s))
    once = apply(a_sq, s)
    assert np.max(np.abs(twice.samples - once.samples)) <= 1e-10 * s.peak


def test_operator_identity_a2_eq_eps_mu(unit_params, grid, rng):
    a_sq = make_multiplier("a_sq", unit_params, grid)
    eps = make_multiplier("eps", unit_params, grid)
    mu = make_multiplier("mu", unit_params, grid)
    c2 = unit_params.c**2
    for _ in range(20):
        s = random_zero_mean(grid, rng)
        lhs = apply(a_sq, s)
        rhs = apply(eps, apply(mu, s))
        assert np.max(np.abs(lhs.samples - rhs.samples / c2)) <= 1e-10 * s.peak


def test_eps_mu_commute(unit_params, grid, rng):
    eps = make_multiplier("eps", unit_params, grid)
    mu = make_multiplier("mu", unit_params, grid)
    # bin-wise the diagonal product commutes exactly
    np.testing.assert_array_equal(eps.values * mu.values, mu.values * eps.values)
    s = random_zero_mean(grid, rng)
    ab = apply(eps, apply(mu, s))
    ba = apply(mu, apply(eps, s))
    assert np.max(np.abs(ab.samples - ba.samples)) <= 1e-12 * s.peak


def test_evanescent_grid_rejected():
    params = DrudeParams(1.0, 2.0, c=1.0, eps0=1.0, mu0=1.0)
    grid = TimeGrid(1024, 0.05)  # bins cover (1, 2) densely
    for kind in ("a", "a_inv"):
        with pytest.raises(InadmissibleGridError):
            make_multiplier(kind, params, grid)


def test_a_inv_tol_rejected():
    params = DrudeParams(1.0, 1.0, c=1.0, eps0=1.0, mu0=1.0)
    # bin 32 sits exactly at the plasma frequency where a = 0
    grid = TimeGrid(256, 2.0 * np.pi / (256 * 0.03125))
    with pytest.raises(InadmissibleGridError):
        make_multiplier("a_inv", params, grid)
    make_multiplier("a", params, grid)  # plain a is fine there


def test_real_to_real_closure(unit_params, grid, rng):
    s = random_zero_mean(grid, rng)
    for kind in ("eps", "mu", "mu_inv", "a", "a_inv", "a_sq", "d_dt", "d_dt_inv"):
        out = apply(make_multiplier(kind, unit_params, grid), s)
        assert np.all(np.isfinite(out.samples))


def test_unknown_kind(unit_params, grid):
    with pytest.raises(ValueError):
        make_multiplier("b", unit_params, grid)
