"""Lossless Drude medium in closed form.

Frequency responses eps(w) = 1 - wpe^2/w^2 and mu(w) = 1 - wpm^2/w^2, the
slowness symbol a(w) = sqrt(eps*mu)/c with its physical branch, the
three-term small-frequency Taylor expansion of a(w), the truncation error
of the leading term, and the dispersive energy density.

Everything here is a pure function of scalar or array frequencies; grid
level concerns (DC bin, Nyquist, band checks per bin) live in
``metapulse.spectral``.
"""

from dataclasses import dataclass

import numpy as np
from scipy import constants

from .errors import EvanescentBandError, SingularFrequencyError

__all__ = [
    "DrudeParams",
    "TaylorA",
    "drude_response",
    "a_squared",
    "a_symbol",
    "taylor_coefficients",
    "taylor_truncation_error",
    "energy_density",
]


@dataclass(frozen=True)
class DrudeParams:
    """Physical constants of a lossless double-Drude medium.

    Parameters
    ----------
    omega_pe : float
        Electric plasma frequency (rad/s).
    omega_pm : float
        Magnetic plasma frequency (rad/s).
    c : float
        Vacuum light speed (m/s). Defaults to the SI value.
    eps0, mu0 : float
        Vacuum permittivity / permeability. Must satisfy c^2*eps0*mu0 = 1.
    chi3 : float
        Kerr coefficient (m^2/V^2); zero switches nonlinearity off.
        Negative values are rejected.
    """

    omega_pe: float
    omega_pm: float
    c: float = constants.c
    eps0: float = constants.epsilon_0
    # CODATA mu_0 is measured and misses c^2*eps0*mu0 = 1 by ~1.2e-12, so
    # the default is derived instead to keep the triple exactly consistent
    mu0: float = 1.0 / (constants.c**2 * constants.epsilon_0)
    chi3: float = 0.0

    def __post_init__(self):
        if not (self.omega_pe > 0 and self.omega_pm > 0):
            raise ValueError("plasma frequencies must be positive")
        if not self.c > 0:
            raise ValueError("c must be positive")
        if abs(self.c**2 * self.eps0 * self.mu0 - 1.0) > 1e-12:
            raise ValueError("c^2 * eps0 * mu0 must equal 1")
        if self.chi3 < 0:
            raise ValueError("chi3 < 0 is not supported")

    @property
    def band_low(self):
        """Lower edge of the evanescent band, min(omega_pe, omega_pm)."""
        return min(self.omega_pe, self.omega_pm)

    @property
    def band_high(self):
        """Upper edge of the evanescent band, max(omega_pe, omega_pm)."""
        return max(self.omega_pe, self.omega_pm)


@dataclass(frozen=True)
class TaylorA:
    """Coefficients of the three-term expansion of the a-hat operator.

    The expansion reads  a-hat ~ k_m2 * dt^{-2} + k_0 + k_p2 * dt^2,
    so in frequency the symbol is  -k_m2/w^2 + k_0 - k_p2*w^2.
    """

    k_m2: float
    k_0: float
    k_p2: float

    def __post_init__(self):
        if not self.k_m2 > 0:
            raise ValueError("k_m2 must be positive")

    def symbol(self, omega):
        """Evaluate the truncated frequency symbol at ``omega``."""
        w2 = np.asarray(omega, dtype=float) ** 2
        return -self.k_m2 / w2 + self.k_0 - self.k_p2 * w2


def _check_nonzero(omega):
    omega = np.asarray(omega, dtype=float)
    if np.any(omega == 0.0):
        raise SingularFrequencyError("Drude response is singular at omega = 0")
    return omega


def drude_response(kind, params, omega):
    """Relative permittivity or permeability 1 - wp^2/w^2.

    ``kind`` is ``"electric"`` (uses omega_pe) or ``"magnetic"`` (omega_pm).
    Accepts scalar or array ``omega``; raises on omega = 0.
    """
    if kind == "electric":
        wp = params.omega_pe
    elif kind == "magnetic":
        wp = params.omega_pm
    else:
        raise ValueError(f"unknown response kind {kind!r}")
    omega = _check_nonzero(omega)
    out = 1.0 - wp**2 / omega**2
    return float(out) if out.ndim == 0 else out


def a_squared(params, omega):
    """Squared slowness symbol a^2(w) = eps(w)*mu(w)/c^2 (s^2/m^2).

    Real for every nonzero frequency; negative inside the evanescent band.
    """
    omega = _check_nonzero(omega)
    eps = 1.0 - params.omega_pe**2 / omega**2
    mu = 1.0 - params.omega_pm**2 / omega**2
    out = eps * mu / params.c**2
    return float(out) if out.ndim == 0 else out


def a_symbol(params, omega):
    """Slowness symbol a(w) with the physical branch of the square root.

    Negative real for |w| below both plasma frequencies (double-negative
    band, backward waves), positive real above both. Frequencies strictly
    inside the evanescent band raise ``EvanescentBandError`` rather than
    returning complex values.
    """
    omega = _check_nonzero(omega)
    aw = np.abs(omega)
    lo, hi = params.band_low, params.band_high
    if np.any((aw > lo) & (aw < hi)):
        raise EvanescentBandError(
            f"frequency inside evanescent band ({lo:g}, {hi:g}) rad/s"
        )
    a2 = np.asarray(a_squared(params, omega))
    sign = np.where(aw <= lo, -1.0, 1.0)
    out = sign * np.sqrt(a2)
    return float(out) if out.ndim == 0 else out


def taylor_coefficients(params):
    """Three-term Taylor coefficients of a(w) around w = 0."""
    p, q, c = params.omega_pe, params.omega_pm, params.c
    k_m2 = p * q / c
    k_0 = -(p**2 + q**2) / (2.0 * c * p * q)
    k_p2 = (1.0 / (2.0 * p * q) + (p**2 + q**2) ** 2 / (8.0 * p**3 * q**3)) / c
    return TaylorA(k_m2=k_m2, k_0=k_0, k_p2=k_p2)


def taylor_truncation_error(params, omega):
    """Relative error of the leading Taylor term -pq/(c w^2) against a(w).

    Only defined in the lower (double-negative) propagating band; raises
    outside it. Vectorized over ``omega`` so a sweep emits the whole curve.
    """
    omega = _check_nonzero(omega)
    if np.any(np.abs(omega) >= params.band_low):
        raise EvanescentBandError(
            "truncation error defined only for |omega| < min plasma frequency"
        )
    a = np.asarray(a_symbol(params, omega))
    lead = -params.omega_pe * params.omega_pm / (params.c * omega**2)
    out = np.abs(lead - a) / np.abs(a)
    return float(out) if out.ndim == 0 else out


def energy_density(params, omega, e_field, h_field):
    """Dispersive field energy density.

    W = d(w*eps)/dw * E^2 + d(w*mu)/dw * H^2
      = (1 + wpe^2/w^2) E^2 + (1 + wpm^2/w^2) H^2,

    positive for any nonzero fields, including in the double-negative band.
    """
    omega = _check_nonzero(omega)
    we = 1.0 + params.omega_pe**2 / omega**2
    wm = 1.0 + params.omega_pm**2 / omega**2
    out = we * np.asarray(e_field, dtype=float) ** 2 + wm * np.asarray(
        h_field, dtype=float
    ) ** 2
    return float(out) if out.ndim == 0 else out
