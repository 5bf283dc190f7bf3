"""Audit the long-wave Taylor approximation of the slowness symbol.

Below both plasma frequencies the Drude slowness a(w) is negative
(negative-index band). The three-term expansion around w = 0 drives the
reduced propagation model; this prints its relative truncation error
across the band.
"""

import numpy as np

from metapulse import DrudeParams, a_symbol, taylor_truncation_error

params = DrudeParams(1.0, 1.0, c=1.0, eps0=1.0, mu0=1.0)

print(f"{'w/wpe':>8} {'a(w)':>12} {'rel. truncation error':>22}")
for frac in (0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9):
    w = frac * params.omega_pe
    print(f"{frac:>8.2f} {a_symbol(params, w):>12.6f} "
          f"{float(taylor_truncation_error(params, w)):>22.3e}")

print("\nthe error is monotone in w and vanishes toward DC; at 0.5 wpe it")
print("is exactly 1/3 for p = q, so the reduction is only trustworthy for")
print("pulses confined well below the plasma frequencies (w <~ 0.1 wpe).")

omegas = np.linspace(0.01, 0.95, 200)
err = taylor_truncation_error(params, omegas)
w10 = omegas[np.searchsorted(err, 0.10)]
print(f"the 10% error level is crossed near w = {w10:.3f} wpe")
