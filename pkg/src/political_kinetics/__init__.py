"""Kinetic model of political competition, innovation blocking and growth.

Submodules
----------
ar_baseline
    Macroscopic innovation function and its blocking region.
kinetic_core
    Activity grids, transition kernels and the evolution equation.
integrator
    Fixed-step Euler / RK4 integration with invariant checks.
scenarios
    Initial profiles, case studies and phase-curve classification.
cli_io
    JSON configuration, CSV/JSON emitters and the command-line tool.
"""

from .ar_baseline import (
    ARParams,
    MuInterval,
    blocking_intervals,
    innovation_value,
    is_blocking,
    min_alpha_linear,
    min_alpha_nonnegative,
    raster,
)
from .errors import (
    BracketError,
    ConfigError,
    DegenerateDenominatorError,
    IntegrationDiagnosticError,
    InvalidArgumentError,
)
from .integrator import IntegrationSettings, Method, Trajectory, integrate, ratio_F, ratio_G, step
from .kinetic_core import (
    CITIZENS,
    COMPETING,
    RULER,
    ActivityGrid,
    Distribution,
    KineticParams,
    Moments,
    PopulationState,
    SubsystemId,
    flux_external,
    flux_internal,
    kernel_B,
    kernel_D,
    moments,
    rhs,
)
from .scenarios import (
    MarginalPair,
    Monotonicity,
    PhaseCurve,
    Profile,
    ProfileSpec,
    build_initial,
    classify_monotonicity,
    run_case_study,
)

__version__ = "0.1.0"
