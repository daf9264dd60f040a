"""Fixed-step time integration of the kinetic system."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateDenominatorError, IntegrationDiagnosticError, InvalidArgumentError
from .kinetic_core import (
    REGIME_TIE_TOL,
    KineticParams,
    Moments,
    PopulationState,
    rhs_array,
    stacked_moments,
)

__all__ = [
    "Method",
    "IntegrationSettings",
    "Sample",
    "Crossing",
    "Trajectory",
    "POSITIVITY_TOL",
    "MASS_DRIFT_TOL",
    "RATIO_EPS",
    "ratio_F",
    "ratio_G",
    "step",
    "integrate",
]

POSITIVITY_TOL = 1e-12
MASS_DRIFT_TOL = 1e-9
RATIO_EPS = 1e-9


class Method(str, enum.Enum):
    EULER = "euler"
    RK4 = "rk4"


@dataclass(frozen=True)
class IntegrationSettings:
    dt: float = 0.01
    t_end: float = 10.0
    method: Method = Method.RK4
    sample_every: int = 1

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise InvalidArgumentError("dt must be a positive finite number")
        if not (self.t_end >= self.dt and math.isfinite(self.t_end)):
            raise InvalidArgumentError("t_end must be finite and >= dt")
        if int(self.sample_every) != self.sample_every or self.sample_every < 1:
            raise InvalidArgumentError("sample_every must be an integer >= 1")

    @property
    def n_steps(self) -> int:
        return int(math.floor(self.t_end / self.dt + 1e-9))

    def check_rates(self, params: KineticParams) -> None:
        """Enforce ``dt <= 1 / (max eta + max_s sum_j mu)``, the Euler positivity bound."""
        bound = 1.0 / params.max_total_rate()
        if self.dt > bound + 1e-15:
            raise InvalidArgumentError(
                f"dt={self.dt} violates the positivity bound dt <= {bound:.6g} "
                "(1 / (max eta + max total cross rate))"
            )


def _ratio(num, den):
    if den < RATIO_EPS:
        raise DegenerateDenominatorError(f"denominator {den!r} below {RATIO_EPS}")
    return num / den


def ratio_F(state_or_moments) -> float:
    """Ruler power over competing-group power, ``E^1_u / E^3_nu``."""
    m = _as_moments(state_or_moments)
    return _ratio(m[0].e_u, m[2].e_nu)


def ratio_G(state_or_moments) -> float:
    """Ruler propensity to innovate over competing-group power, ``E^1_nu / E^3_nu``."""
    m = _as_moments(state_or_moments)
    return _ratio(m[0].e_nu, m[2].e_nu)


def _as_moments(x):
    if isinstance(x, PopulationState):
        return x.moments()
    if isinstance(x, Sample):
        return x.moments
    return tuple(x)


@dataclass(frozen=True)
class Sample:
    t: float
    moments: tuple[Moments, Moments, Moments]

    @property
    def F(self) -> Optional[float]:
        try:
            return ratio_F(self.moments)
        except DegenerateDenominatorError:
            return None

    @property
    def G(self) -> Optional[float]:
        try:
            return ratio_G(self.moments)
        except DegenerateDenominatorError:
            return None


@dataclass(frozen=True)
class Crossing:
    """A regime-driving mean crossed 1/2 during step ``step``."""

    step: int
    t: float
    subsystem: int
    moment: str
    before: float
    after: float


@dataclass
class Trajectory:
    samples: list[Sample]
    final: PopulationState
    crossings: list[Crossing] = field(default_factory=list)

    def __len__(self):
        return len(self.samples)

    @property
    def t(self) -> np.ndarray:
        return np.array([s.t for s in self.samples])

    def series(self, subsystem: int, moment: str) -> np.ndarray:
        """Time series of ``E^subsystem_moment``, moment in {'u', 'nu'}."""
        attr = {"u": "e_u", "nu": "e_nu"}[moment]
        return np.array([getattr(s.moments[subsystem - 1], attr) for s in self.samples])


def _euler(grid, f, params, dt):
    return f + dt * rhs_array(grid, f, params)


def _rk4(grid, f, params, dt):
    k1 = rhs_array(grid, f, params)
    k2 = rhs_array(grid, f + 0.5 * dt * k1, params)
    k3 = rhs_array(grid, f + 0.5 * dt * k2, params)
    k4 = rhs_array(grid, f + dt * k3, params)
    return f + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


_STEPPERS = {Method.EULER: _euler, Method.RK4: _rk4}


def _check(f, step_index):
    for k in range(3):
        low = f[k].min()
        if low < -POSITIVITY_TOL:
            raise IntegrationDiagnosticError(f"positivity violated: entry {low:.3e}", k + 1, step_index)
        drift = abs(f[k].sum() - 1.0)
        if drift > MASS_DRIFT_TOL:
            raise IntegrationDiagnosticError(f"mass drift {drift:.3e}", k + 1, step_index)


def _advance(grid, f, params, dt, method, step_index):
    out = _STEPPERS[Method(method)](grid, f, params, dt)
    _check(out, step_index)
    return out


def step(state: PopulationState, params: KineticParams, dt: float, method=Method.RK4, *, step_index=0) -> PopulationState:
    """Advance ``state`` by one step of size ``dt``.

    Output is checked, never corrected: entries below ``-1e-12`` or a mass drift
    above ``1e-9`` raise :class:`IntegrationDiagnosticError`.
    """
    if not dt > 0:
        raise InvalidArgumentError("dt must be > 0")
    f = _advance(state.grid, state.f, params, dt, method, step_index)
    return PopulationState(state.grid, f, state.t + dt)


# (subsystem index, moment) pairs whose crossing of 1/2 switches a kernel
_REGIME_MOMENTS = ((0, "e_u"), (0, "e_nu"), (1, "e_nu"), (2, "e_u"), (2, "e_nu"))


def _crossings(before, after, step_index, t):
    out = []
    for k, attr in _REGIME_MOMENTS:
        a, b = getattr(before[k], attr), getattr(after[k], attr)
        if (a >= 0.5 - REGIME_TIE_TOL) != (b >= 0.5 - REGIME_TIE_TOL):
            out.append(Crossing(step_index, t, k + 1, attr, a, b))
    return out


def integrate(
    state: PopulationState,
    params: KineticParams,
    settings: IntegrationSettings = IntegrationSettings(),
    observer: Optional[Callable[[Sample], None]] = None,
) -> Trajectory:
    """Integrate from ``state.t`` for ``settings.n_steps`` steps.

    Moments are sampled at step 0 and every ``sample_every`` steps after it;
    each sample is passed to ``observer`` as it is taken.  Time is computed as
    ``t0 + n * dt`` so sample times carry no accumulated round-off.
    """
    settings.check_rates(params)
    grid, f, t0 = state.grid, np.array(state.f, dtype=float), state.t
    dt, method = settings.dt, settings.method

    before = state.moments()
    samples = [Sample(t0, before)]
    if observer is not None:
        observer(samples[0])
    crossings = []
    for n in range(1, settings.n_steps + 1):
        f = _advance(grid, f, params, dt, method, n)
        t = t0 + n * dt
        after = stacked_moments(grid, f)
        crossings.extend(_crossings(before, after, n, t))
        before = after
        if n % settings.sample_every == 0:
            sample = Sample(t, after)
            samples.append(sample)
            if observer is not None:
                observer(sample)
    final = PopulationState(grid, f, t0 + settings.n_steps * dt)
    return Trajectory(samples=samples, final=final, crossings=crossings)
