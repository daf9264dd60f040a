"""Initial conditions, case studies and phase-curve analysis."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

import numpy as np

from .errors import InvalidArgumentError
from .integrator import IntegrationSettings, Trajectory, integrate, ratio_F, ratio_G
from .kinetic_core import (
    CITIZENS,
    COMPETING,
    RULER,
    ActivityGrid,
    Distribution,
    KineticParams,
    PopulationState,
    SubsystemId,
)

__all__ = [
    "Profile",
    "MarginalPair",
    "ProfileSpec",
    "PhaseCurve",
    "Monotonicity",
    "CaseResult",
    "CASE_IDS",
    "CASE_V_VARIANTS",
    "marginal",
    "build_initial",
    "case_profile",
    "run_case_study",
    "run_case_v",
    "phase_curve",
    "classify_monotonicity",
    "ratio_F",
    "ratio_G",
]

BLOCK_FRACTION = 0.2


class Profile(str, enum.Enum):
    STRONG = "strong"
    WEAK = "weak"
    MEDIUM = "medium"
    UNIFORM = "uniform"
    POOR = "poor"
    RICH = "rich"


def marginal(profile, n_nodes: int) -> np.ndarray:
    """Marginal mass over ``n_nodes`` nodes for a named profile.

    Block profiles put equal mass on ``ceil(20%)`` of the nodes: the top block
    for Strong/Rich, the bottom block for Weak/Poor and the middle block for
    Medium (an off-centre middle leans to the lower index).
    """
    profile = Profile(profile)
    out = np.zeros(n_nodes)
    if profile is Profile.UNIFORM:
        out[:] = 1.0 / n_nodes
        return out
    k = math.ceil(BLOCK_FRACTION * n_nodes - 1e-12)
    if profile in (Profile.STRONG, Profile.RICH):
        start = n_nodes - k
    elif profile in (Profile.WEAK, Profile.POOR):
        start = 0
    else:
        start = (n_nodes - k) // 2
    out[start : start + k] = 1.0 / k
    return out


@dataclass(frozen=True)
class MarginalPair:
    u: Profile = Profile.UNIFORM
    nu: Profile = Profile.UNIFORM

    def __post_init__(self):
        object.__setattr__(self, "u", Profile(self.u))
        object.__setattr__(self, "nu", Profile(self.nu))


SubsystemProfile = Union[MarginalPair, np.ndarray]


@dataclass(frozen=True)
class ProfileSpec:
    """Initial profile of each subsystem: a marginal pair or an explicit table."""

    ruler: SubsystemProfile = field(default_factory=MarginalPair)
    citizens: SubsystemProfile = field(default_factory=MarginalPair)
    competing: SubsystemProfile = field(default_factory=MarginalPair)

    def __getitem__(self, s) -> SubsystemProfile:
        return (self.ruler, self.citizens, self.competing)[SubsystemId(s).index]


def build_initial(spec: ProfileSpec, grid: ActivityGrid = ActivityGrid()) -> PopulationState:
    """Product-form initial state from ``spec``; explicit tables pass through."""
    dists = []
    for s in SubsystemId:
        prof = spec[s]
        if isinstance(prof, MarginalPair):
            f = np.outer(marginal(prof.u, grid.I + 1), marginal(prof.nu, grid.R + 1))
        else:
            f = np.asarray(prof, dtype=float)
        dists.append(Distribution(grid, f))
    return PopulationState.from_distributions(dists)


CASE_IDS = ("I", "II", "III", "IV_poor", "IV_rich", "V")

_S, _W, _M, _U = Profile.STRONG, Profile.WEAK, Profile.MEDIUM, Profile.UNIFORM

# (ruler, competing) clusters explored for the ratio study
CASE_V_VARIANTS = {
    "strong_ruler": (_S, _W),
    "weak_ruler": (_W, _S),
    "balanced": (_M, _M),
}


def case_profile(case_id: str, variant: Optional[str] = None) -> ProfileSpec:
    """Initial profiles of the named case study.

    In Case IV the citizens' opinion follows their wealth block (a poor society
    starts with a low opinion of the ruler, a rich one with a high opinion);
    a uniform opinion would leave the two runs identical for the ruler.
    """
    uniform = MarginalPair(_U, _U)
    if case_id == "I":
        return ProfileSpec(MarginalPair(_S, _S), uniform, MarginalPair(_W, _W))
    if case_id == "II":
        return ProfileSpec(MarginalPair(_S, _S), uniform, MarginalPair(_S, _S))
    if case_id == "III":
        return ProfileSpec(MarginalPair(_W, _W), uniform, MarginalPair(_S, _S))
    if case_id in ("IV_poor", "IV_rich"):
        wealth = Profile.POOR if case_id == "IV_poor" else Profile.RICH
        opinion = _W if case_id == "IV_poor" else _S
        return ProfileSpec(MarginalPair(_M, _M), MarginalPair(wealth, opinion), MarginalPair(_M, _M))
    if case_id == "V":
        ruler, competing = CASE_V_VARIANTS[variant or "strong_ruler"]
        return ProfileSpec(MarginalPair(ruler, ruler), uniform, MarginalPair(competing, competing))
    raise InvalidArgumentError(f"unknown case study {case_id!r}; expected one of {CASE_IDS}")


@dataclass(frozen=True)
class PhaseCurve:
    """Ruler propensity to innovate (y) against competing-group power (x)."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise InvalidArgumentError("x and y must have the same length")

    def __len__(self):
        return len(self.x)


def phase_curve(traj: Trajectory) -> PhaseCurve:
    return PhaseCurve(x=traj.series(3, "nu"), y=traj.series(1, "nu"))


@dataclass
class CaseResult:
    case_id: str
    spec: ProfileSpec
    trajectory: Trajectory
    phase: PhaseCurve


def run_case_study(
    case_id: str,
    params: KineticParams = KineticParams(),
    settings: IntegrationSettings = IntegrationSettings(),
    grid: ActivityGrid = ActivityGrid(),
    variant: Optional[str] = None,
    spec: Optional[ProfileSpec] = None,
) -> CaseResult:
    """Integrate one case study; ``spec`` overrides the built-in profiles."""
    spec = spec if spec is not None else case_profile(case_id, variant)
    traj = integrate(build_initial(spec, grid), params, settings)
    return CaseResult(case_id, spec, traj, phase_curve(traj))


def run_case_v(
    params: KineticParams = KineticParams(),
    settings: IntegrationSettings = IntegrationSettings(),
    grid: ActivityGrid = ActivityGrid(),
    variants: Optional[Mapping[str, tuple]] = None,
) -> dict[str, CaseResult]:
    """Run the ratio study for each (ruler, competing) cluster variant."""
    variants = CASE_V_VARIANTS if variants is None else variants
    out = {}
    for name, (ruler, competing) in variants.items():
        spec = ProfileSpec(
            MarginalPair(ruler, ruler), MarginalPair(_U, _U), MarginalPair(competing, competing)
        )
        out[name] = run_case_study("V", params, settings, grid, spec=spec)
    return out


class Monotonicity(str, enum.Enum):
    INCREASING = "MonotoneIncreasing"
    DECREASING = "MonotoneDecreasing"
    NONMONOTONE = "Nonmonotone"
    FLAT = "Flat"


def classify_monotonicity(curve: PhaseCurve, eps: float = 1e-4) -> Monotonicity:
    """Classify y as a function of x along the curve.

    Segments with ``|dx| <= eps`` are skipped, and slopes with ``|dy/dx| <= eps``
    count as zero.
    """
    if len(curve) < 3:
        raise InvalidArgumentError("need at least 3 points")
    if not eps > 0:
        raise InvalidArgumentError("eps must be > 0")
    dx = np.diff(np.asarray(curve.x, dtype=float))
    dy = np.diff(np.asarray(curve.y, dtype=float))
    keep = np.abs(dx) > eps
    slope = dy[keep] / dx[keep]
    pos = bool(np.any(slope > eps))
    neg = bool(np.any(slope < -eps))
    if pos and neg:
        return Monotonicity.NONMONOTONE
    if pos:
        return Monotonicity.INCREASING
    if neg:
        return Monotonicity.DECREASING
    return Monotonicity.FLAT
