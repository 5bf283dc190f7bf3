"""Propagation of directed waves along x.

Three propagation models, from exact to reduced:

* exact linear: per-bin phases exp(-/+ i w a(w) x), the closed solution of
  dPi/dx = -a-hat dt Pi, dLambda/dx = +a-hat dt Lambda;
* Klein-Gordon-Fock reduction: only the leading dispersion term is kept,
  dPi/dx = -(pq/c) dt^{-1} Pi (and the opposite sign for Lambda);
* Kerr-coupled nonlinear system,

      c Pi_xt     + pq Pi     = -K [(Pi - Lambda)_tt]^3,
      c Lambda_xt - pq Lambda = +K [(Pi - Lambda)_tt]^3,

  with K = mu0 chi3 c^3 / (2 p^3 q), marched as a first-order-in-x system
  after applying dt^{-1} (classical RK4, cubic term evaluated pointwise in
  time with optional 2/3-rule dealiasing).

The dimensionless form pi = Pi_tt/alpha, lam = Lambda_tt/alpha, zeta = x/beta
with alpha = sqrt(2 p^4 q^2 / (mu0 chi3 c^3)), beta = c/(pq) has unit
coefficients; a solver for it is provided for dual-path consistency checks.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import BlowUpError, InadmissibleGridError
from .spectral import DEFAULT_TOL_A, Signal, apply, make_multiplier
from .waves import DirectedPair

__all__ = [
    "PropagationRecord",
    "KerrCoupling",
    "kerr_coupling",
    "propagate_linear_exact",
    "propagate_kg",
    "propagate_nonlinear",
    "propagate_unidirectional",
    "propagate_dimensionless",
    "to_dimensionless",
    "from_dimensionless",
    "build_nonlinearity",
]


@dataclass
class PropagationRecord:
    """Sequence of directed-pair snapshots along x plus run metadata."""

    stations: np.ndarray
    states: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.stations = np.asarray(self.stations, dtype=float)
        if self.stations.size != len(self.states):
            raise ValueError("one state per station required")
        if self.stations.size and (
            self.stations[0] != 0.0 or np.any(np.diff(self.stations) <= 0)
        ):
            raise ValueError("stations must increase strictly from 0")
        grids = {s.grid for s in self.states}
        if len(grids) > 1:
            raise ValueError("all states must share one grid")

    @property
    def final(self):
        return self.states[-1]


@dataclass(frozen=True)
class KerrCoupling:
    """Kerr coefficient and the natural amplitude/length scales."""

    big_k: float
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("scales must be positive")


def kerr_coupling(params):
    """Derive (K, alpha, beta) from medium parameters; needs chi3 > 0."""
    if not params.chi3 > 0:
        raise ValueError("Kerr scales are undefined for chi3 = 0")
    p, q, c, mu0 = params.omega_pe, params.omega_pm, params.c, params.mu0
    big_k = mu0 * params.chi3 * c**3 / (2.0 * p**3 * q)
    alpha = np.sqrt(2.0 * p**4 * q**2 / (mu0 * params.chi3 * c**3))
    beta = c / (p * q)
    return KerrCoupling(big_k=big_k, alpha=alpha, beta=beta)


def _unimodular(grid, phase_exponent):
    """Phase factors from exponent array; DC and Nyquist forced to 1."""
    factors = np.exp(1j * phase_exponent)
    factors[0] = 1.0
    factors[grid.n // 2] = 1.0
    return factors


def _apply_phases(grid, dp, f_pi, f_lam):
    pi = np.fft.ifft(f_pi * np.fft.fft(dp.pi.samples)).real
    lam = np.fft.ifft(f_lam * np.fft.fft(dp.lam.samples)).real
    return DirectedPair(Signal(grid, pi), Signal(grid, lam))


def propagate_linear_exact(dp0, x, params, grid, tol_a=DEFAULT_TOL_A):
    """Exact linear propagation by x >= 0: per-bin phase -/+ w a(w) x."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    a_vals = make_multiplier("a", params, grid, tol_a).values.real
    w = grid.omegas
    f_pi = _unimodular(grid, -w * a_vals * x)
    f_lam = _unimodular(grid, +w * a_vals * x)
    return _apply_phases(grid, dp0, f_pi, f_lam)


def propagate_kg(dp0, x, params, grid, band_warn=0.5):
    """Klein-Gordon-Fock propagation by x: per-bin phase +/- pq x/(c w).

    Valid for spectra concentrated well below the plasma frequencies;
    warns when significant energy sits above ``band_warn * min(p, q)``.
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    w = grid.omegas
    _warn_band(dp0, grid, band_warn * params.band_low)
    pq_c = params.omega_pe * params.omega_pm / params.c
    expo = np.zeros(grid.n)
    nz = w != 0.0
    expo[nz] = pq_c * x / w[nz]
    f_pi = _unimodular(grid, expo)
    f_lam = _unimodular(grid, -expo)
    return _apply_phases(grid, dp0, f_pi, f_lam)


def _warn_band(dp, grid, w_max):
    spec = np.abs(np.fft.fft(dp.pi.samples)) + np.abs(np.fft.fft(dp.lam.samples))
    peak = np.max(spec)
    if peak == 0.0:
        return
    outside = np.abs(grid.omegas) > w_max
    if np.max(spec[outside], initial=0.0) > 1e-6 * peak:
        warnings.warn(
            f"spectral content above {w_max:g} rad/s; the long-wave "
            "reduction may be inaccurate", stacklevel=3,
        )


class _KerrStepper:
    """Shared spectral plumbing for the RK4 marchers."""

    def __init__(self, grid, dealias):
        n = grid.n
        w = grid.omegas
        self.grid = grid
        self.w2 = w**2
        self.inv_iw = np.zeros(n, dtype=complex)
        nz = w != 0.0
        self.inv_iw[nz] = 1.0 / (1j * w[nz])
        self.inv_iw[n // 2] = 0.0
        if dealias:
            k = np.fft.fftfreq(n, 1.0) * n
            self.mask = (np.abs(k) <= n // 3).astype(float)
        else:
            self.mask = None

    def cube(self, u_hat):
        """Pointwise cube of the time-domain image of u_hat, dealiased."""
        if self.mask is not None:
            u_hat = u_hat * self.mask
        w_hat = np.fft.fft(np.fft.ifft(u_hat).real ** 3)
        if self.mask is not None:
            w_hat = w_hat * self.mask
        return w_hat


def _march_rk4(rhs, state, x_end, n_steps, grid, meta):
    """Classical RK4 over [0, x_end]; records every station.

    ``state`` is a tuple of complex spectra. Aborts via BlowUpError with
    the partial record when the state turns non-finite.
    """
    if n_steps < 4:
        raise ValueError("n_steps must be at least 4")
    h = x_end / n_steps
    stations = [0.0]
    states = [_to_pair(grid, state)]
    for i in range(n_steps):
        k1 = rhs(state)
        k2 = rhs(_axpy(state, k1, 0.5 * h))
        k3 = rhs(_axpy(state, k2, 0.5 * h))
        k4 = rhs(_axpy(state, k3, h))
        state = tuple(
            s + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d)
            for s, a, b, c, d in zip(state, k1, k2, k3, k4)
        )
        if not all(np.all(np.isfinite(s)) for s in state):
            partial = PropagationRecord(
                np.array(stations), states, {**meta, "aborted_at": (i + 1) * h}
            )
            raise BlowUpError(
                f"non-finite state at step {i + 1} (x = {(i + 1) * h:g})",
                record=partial,
            )
        stations.append((i + 1) * h)
        states.append(_to_pair(grid, state))
    return PropagationRecord(np.array(stations), states, meta)


def _axpy(state, deriv, scale):
    return tuple(s + scale * d for s, d in zip(state, deriv))


def _to_pair(grid, state):
    pi_hat, lam_hat = state
    return DirectedPair(
        Signal(grid, np.fft.ifft(pi_hat).real),
        Signal(grid, np.fft.ifft(lam_hat).real),
    )


def propagate_nonlinear(dp0, x_end, n_steps, params, grid, dealias=True,
                        _linear_sign=1.0):
    """March the coupled Kerr system from the entry plane to x_end.

    The second-order-in-(x,t) system is integrated in its dt^{-1}-applied
    first-order form

        dPi/dx     = dt^{-1} [ -(pq/c) Pi     - (K/c) ((Pi-Lambda)_tt)^3 ],
        dLambda/dx = dt^{-1} [ +(pq/c) Lambda + (K/c) ((Pi-Lambda)_tt)^3 ],

    which poses the boundary-regime data as an x-initial-value problem.

    ``_linear_sign`` flips the +-(pq/c) pair; the system maps onto itself
    under (Pi, Lambda) -> (-Lambda, -Pi) together with that flip, which the
    test suite uses as a solver diagnostic.
    """
    if params.chi3 < 0:
        raise ValueError("chi3 must be nonnegative")
    st = _KerrStepper(grid, dealias)
    pq_c = _linear_sign * params.omega_pe * params.omega_pm / params.c
    k_c = (
        params.mu0 * params.chi3 * params.c**2
        / (2.0 * params.omega_pe**3 * params.omega_pm)
    )

    def rhs(state):
        pi_hat, lam_hat = state
        w_hat = st.cube(-st.w2 * (pi_hat - lam_hat))
        d_pi = st.inv_iw * (-pq_c * pi_hat - k_c * w_hat)
        d_lam = st.inv_iw * (pq_c * lam_hat + k_c * w_hat)
        return d_pi, d_lam

    state0 = (np.fft.fft(dp0.pi.samples), np.fft.fft(dp0.lam.samples))
    meta = _run_meta("nonlinear-coupled", params, grid, n_steps, dealias)
    return _march_rk4(rhs, state0, x_end, n_steps, grid, meta)


def propagate_unidirectional(pi0, x_end, n_steps, params, grid, dealias=True):
    """Kerr marching with the left wave frozen at zero."""
    if params.chi3 < 0:
        raise ValueError("chi3 must be nonnegative")
    st = _KerrStepper(grid, dealias)
    pq_c = params.omega_pe * params.omega_pm / params.c
    k_c = (
        params.mu0 * params.chi3 * params.c**2
        / (2.0 * params.omega_pe**3 * params.omega_pm)
    )

    def rhs(state):
        (pi_hat,) = state
        w_hat = st.cube(-st.w2 * pi_hat)
        return (st.inv_iw * (-pq_c * pi_hat - k_c * w_hat),)

    state0 = (np.fft.fft(pi0.samples),)
    meta = _run_meta("nonlinear-unidirectional", params, grid, n_steps, dealias)

    # reuse the coupled marcher by padding with a frozen zero Lambda
    zero = np.zeros(grid.n, dtype=complex)

    def rhs2(state):
        d = rhs((state[0],))
        return (d[0], zero)

    return _march_rk4(rhs2, (state0[0], zero.copy()), x_end, n_steps, grid, meta)


def propagate_dimensionless(dp0, zeta_end, n_steps, grid, dealias=True):
    """March the unit-coefficient system in (pi, lam, zeta) variables:

        pi_zeta  = dt^{-1} [ -pi  - ((pi - lam)^3)_tt ],
        lam_zeta = dt^{-1} [ +lam + ((pi - lam)^3)_tt ].
    """
    st = _KerrStepper(grid, dealias)

    def rhs(state):
        pi_hat, lam_hat = state
        w_hat = -st.w2 * st.cube(pi_hat - lam_hat)
        return (
            st.inv_iw * (-pi_hat - w_hat),
            st.inv_iw * (lam_hat + w_hat),
        )

    state0 = (np.fft.fft(dp0.pi.samples), np.fft.fft(dp0.lam.samples))
    meta = {"model": "nonlinear-dimensionless", "n_steps": n_steps,
            "dealias": dealias, "grid": {"n": grid.n, "dt": grid.dt}}
    return _march_rk4(rhs, state0, zeta_end, n_steps, grid, meta)


def _run_meta(model, params, grid, n_steps, dealias):
    return {
        "model": model,
        "params": {
            "omega_pe": params.omega_pe,
            "omega_pm": params.omega_pm,
            "c": params.c,
            "chi3": params.chi3,
        },
        "grid": {"n": grid.n, "dt": grid.dt},
        "n_steps": n_steps,
        "dealias": dealias,
    }


def _second_t_derivative(grid, samples, scale):
    w2 = grid.omegas**2
    return np.fft.ifft(-w2 * np.fft.fft(samples)).real * scale


def _inverse_second_t_derivative(grid, samples, scale):
    w2 = grid.omegas**2
    inv = np.zeros(grid.n)
    nz = w2 != 0.0
    inv[nz] = -1.0 / w2[nz]
    return np.fft.ifft(inv * np.fft.fft(samples)).real * scale


def to_dimensionless(record, coupling):
    """Rescale a physical record to (pi, lam, zeta) variables."""
    grid = record.states[0].grid
    states = [
        DirectedPair(
            Signal(grid, _second_t_derivative(grid, s.pi.samples, 1.0 / coupling.alpha)),
            Signal(grid, _second_t_derivative(grid, s.lam.samples, 1.0 / coupling.alpha)),
        )
        for s in record.states
    ]
    meta = {**record.meta, "variables": "dimensionless"}
    return PropagationRecord(record.stations / coupling.beta, states, meta)


def from_dimensionless(record, coupling):
    """Invert :func:`to_dimensionless`; dt^{-2} annihilates the DC bin."""
    grid = record.states[0].grid
    states = [
        DirectedPair(
            Signal(grid, _inverse_second_t_derivative(grid, s.pi.samples, coupling.alpha)),
            Signal(grid, _inverse_second_t_derivative(grid, s.lam.samples, coupling.alpha)),
        )
        for s in record.states
    ]
    meta = {**record.meta, "variables": "physical"}
    return PropagationRecord(record.stations * coupling.beta, states, meta)


def build_nonlinearity(e, params, grid, dominant_only=True):
    """Kerr source driven by the electric field.

    Dominant form (chi3/2) * mu0 * q^2 * dt^{-1}(e^3), keeping only the
    q^2 dt^{-2} part of mu-hat. With ``dominant_only=False`` the identity
    part of mu-hat is retained for sensitivity studies:
    (chi3/2) * mu0 * (q^2 dt^{-1} e^3 - dt e^3).
    """
    cube = Signal(grid, e.samples**3)
    d_dt_inv = make_multiplier("d_dt_inv", params, grid)
    q2 = params.omega_pm**2
    lead = (0.5 * params.chi3 * params.mu0 * q2) * apply(d_dt_inv, cube)
    if dominant_only:
        return lead
    d_dt = make_multiplier("d_dt", params, grid)
    return lead - (0.5 * params.chi3 * params.mu0) * apply(d_dt, cube)
