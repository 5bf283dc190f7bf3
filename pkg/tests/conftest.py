"""Shared fixtures: natural-unit media and band-limited random pulses."""

import numpy as np
import pytest

from metapulse import DrudeParams, Signal, TimeGrid


@pytest.fixture
def unit_params():
    # p = q = c = 1 keeps the evanescent band empty (a single point)
    return DrudeParams(1.0, 1.0, c=1.0, eps0=1.0, mu0=1.0)


@pytest.fixture
def kerr_params():
    return DrudeParams(1.0, 1.0, c=1.0, eps0=1.0, mu0=1.0, chi3=1.0)


@pytest.fixture
def grid():
    return TimeGrid(4096, 0.05)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_zero_mean(grid, rng, k_max=None, scale=1.0):
    """Real random signal supported on bins 1..k_max (zero DC, no Nyquist)."""
    n = grid.n
    k_max = n // 4 if k_max is None else k_max
    spec = np.zeros(n, dtype=complex)
    amps = rng.standard_normal(k_max) + 1j * rng.standard_normal(k_max)
    spec[1 : k_max + 1] = amps
    spec[-k_max:] = np.conj(amps[::-1])
    samples = np.fft.ifft(spec).real
    samples *= scale / np.max(np.abs(samples))
    return Signal(grid, samples)


def gaussian_pulse(grid, carrier, width, amplitude=1.0):
    """Zero-mean Gaussian-modulated sine centered in the window."""
    t = grid.times
    t0 = 0.5 * grid.window
    env = np.exp(-((t - t0) ** 2) / (2.0 * width**2))
    samples = amplitude * env * np.sin(carrier * (t - t0))
    samples = samples - np.mean(samples)
    return Signal(grid, samples)
