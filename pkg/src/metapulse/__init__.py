"""Directed-wave pulse propagation in 1D dispersive Drude metamaterials.

The boundary fields (E, B) at the entry plane are split into right/left
wave amplitudes by projection operators built from the medium's slowness
operator a-hat; the amplitudes are then propagated along x exactly (linear),
in the long-wave Klein-Gordon-Fock reduction, or through the Kerr-coupled
nonlinear system, all cross-validated against an independent FDTD oracle.
"""

__version__ = "0.1.0"

from .errors import (
    BlowUpError,
    ConfigError,
    EvanescentBandError,
    GridMismatchError,
    InadmissibleGridError,
    MetapulseError,
    SingularFrequencyError,
)
from .medium import (
    DrudeParams,
    TaylorA,
    a_squared,
    a_symbol,
    drude_response,
    energy_density,
    taylor_coefficients,
    taylor_truncation_error,
)
from .spectral import (
    Multiplier,
    Signal,
    Spectrum,
    TimeGrid,
    apply,
    from_spectrum,
    make_multiplier,
    to_spectrum,
)
from .projectors import (
    FieldPair,
    ProjectorPair,
    apply_projector,
    build_projectors,
    commutation_check,
    l_operator,
)
from .waves import BoundaryRegime, DirectedPair, reconstruct, split
from .evolution import (
    KerrCoupling,
    PropagationRecord,
    build_nonlinearity,
    from_dimensionless,
    kerr_coupling,
    propagate_dimensionless,
    propagate_kg,
    propagate_linear_exact,
    propagate_nonlinear,
    propagate_unidirectional,
    to_dimensionless,
)
from .stationary import (
    StationaryParams,
    cardano_f,
    integrate_oscillator,
    linear_l_profile,
    linear_r_profile,
    series_f,
    stationary_params,
)
from .reference import MaxwellState, YeeGrid1D, run_boundary_source, step
