"""Three-subsystem kinetic model on a discrete activity grid.

Each functional subsystem carries a probability mass table ``f[i, r]`` over the
activity nodes ``(u_i, nu_r) = (i/I, r/R)``:

========  ====================  =======================
 s         u                     nu
========  ====================  =======================
 1 ruler   political power       propensity to innovate
 2 cit.    wealth                political opinion
 3 comp.   wealth                political power
========  ====================  =======================

Binary interactions inside a subsystem move only ``nu`` (kernel D); the
influence of another subsystem's first moments moves only ``u`` (kernel B).
The evolution equation is ``df_s/dt = J_s[f_s] + JJ_s[f]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import InvalidArgumentError

__all__ = [
    "SubsystemId",
    "RULER",
    "CITIZENS",
    "COMPETING",
    "ActivityGrid",
    "Distribution",
    "PopulationState",
    "KineticParams",
    "Moments",
    "INFLUENCE_PAIRS",
    "REGIME_TIE_TOL",
    "at_least_half",
    "moments",
    "stacked_moments",
    "kernel_D",
    "kernel_B",
    "d_matrix",
    "b_matrix",
    "flux_internal",
    "flux_external",
    "rhs",
    "rhs_array",
]

# Means within this distance below 1/2 take the ">= 1/2" branch.  Uniform
# marginals sit exactly on 1/2 and round-off must not flip the regime.
REGIME_TIE_TOL = 1e-12

MASS_TOL = 1e-12


class SubsystemId(enum.IntEnum):
    RULER = 1
    CITIZENS = 2
    COMPETING = 3

    @property
    def index(self) -> int:
        return self.value - 1


RULER = SubsystemId.RULER
CITIZENS = SubsystemId.CITIZENS
COMPETING = SubsystemId.COMPETING
_SUBSYSTEMS = tuple(SubsystemId)

# (influenced, influencer) pairs with a defined B kernel
INFLUENCE_PAIRS = frozenset(
    {(RULER, CITIZENS), (RULER, COMPETING), (CITIZENS, RULER), (COMPETING, RULER)}
)


def at_least_half(x: float) -> bool:
    return x >= 0.5 - REGIME_TIE_TOL


@dataclass(frozen=True)
class ActivityGrid:
    I: int = 10
    R: int = 10

    def __post_init__(self):
        if int(self.I) != self.I or int(self.R) != self.R or self.I < 1 or self.R < 1:
            raise InvalidArgumentError(f"grid needs integers I, R >= 1, got ({self.I}, {self.R})")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.I + 1, self.R + 1)

    @cached_property
    def u(self) -> np.ndarray:
        u = np.arange(self.I + 1) / self.I
        u.setflags(write=False)
        return u

    @cached_property
    def nu(self) -> np.ndarray:
        nu = np.arange(self.R + 1) / self.R
        nu.setflags(write=False)
        return nu


@dataclass(frozen=True)
class Moments:
    e_u: float
    e_nu: float


@dataclass(frozen=True)
class Distribution:
    """Probability mass table of one subsystem."""

    grid: ActivityGrid
    f: np.ndarray

    def __post_init__(self):
        f = np.array(self.f, dtype=float)
        if f.shape != self.grid.shape:
            raise InvalidArgumentError(f"table shape {f.shape} != grid shape {self.grid.shape}")
        if not np.all(np.isfinite(f)):
            raise InvalidArgumentError("table has non-finite entries")
        if f.min() < 0:
            raise InvalidArgumentError(f"negative mass {f.min():.3e}")
        if abs(f.sum() - 1.0) > MASS_TOL:
            raise InvalidArgumentError(f"total mass {f.sum()!r} is not 1")
        f.setflags(write=False)
        object.__setattr__(self, "f", f)

    @classmethod
    def uniform(cls, grid: ActivityGrid) -> "Distribution":
        return cls(grid, np.full(grid.shape, 1.0 / (grid.shape[0] * grid.shape[1])))

    @classmethod
    def dirac(cls, grid: ActivityGrid, i: int, r: int) -> "Distribution":
        f = np.zeros(grid.shape)
        f[i, r] = 1.0
        return cls(grid, f)


def _moments_array(grid, f):
    e_u = float(grid.u @ f.sum(axis=1))
    e_nu = float(grid.nu @ f.sum(axis=0))
    return Moments(e_u, e_nu)


def stacked_moments(grid: ActivityGrid, f: np.ndarray) -> tuple[Moments, ...]:
    """Moments of every table in a stacked ``(n, I+1, R+1)`` array."""
    e_u = f.sum(axis=2) @ grid.u
    e_nu = f.sum(axis=1) @ grid.nu
    return tuple(Moments(float(a), float(b)) for a, b in zip(e_u, e_nu))


def moments(d: Distribution) -> Moments:
    """First moments ``(E_u, E_nu)`` of a distribution."""
    return _moments_array(d.grid, d.f)


@dataclass(frozen=True)
class PopulationState:
    """Distributions of the three subsystems at time ``t``.

    ``f`` has shape ``(3, I+1, R+1)``; ``f[s.index]`` is subsystem ``s``.
    """

    grid: ActivityGrid
    f: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        f = np.array(self.f, dtype=float)
        if f.shape != (3,) + self.grid.shape:
            raise InvalidArgumentError(f"state shape {f.shape} != {(3,) + self.grid.shape}")
        if self.t < 0:
            raise InvalidArgumentError("t must be >= 0")
        f.setflags(write=False)
        object.__setattr__(self, "f", f)

    @classmethod
    def from_distributions(cls, dists, t=0.0) -> "PopulationState":
        dists = list(dists)
        if len(dists) != 3:
            raise InvalidArgumentError("exactly three distributions are required")
        grid = dists[0].grid
        if any(d.grid != grid for d in dists):
            raise InvalidArgumentError("distributions must share one grid")
        return cls(grid, np.stack([d.f for d in dists]), t)

    @property
    def dists(self) -> tuple[Distribution, Distribution, Distribution]:
        return tuple(Distribution(self.grid, self.f[k]) for k in range(3))

    def dist(self, s: SubsystemId) -> Distribution:
        return Distribution(self.grid, self.f[SubsystemId(s).index])

    def moments(self) -> tuple[Moments, Moments, Moments]:
        return stacked_moments(self.grid, self.f)

    def masses(self) -> np.ndarray:
        return self.f.sum(axis=(1, 2))

    def validate(self, tol=MASS_TOL) -> None:
        if self.f.min() < 0:
            raise InvalidArgumentError(f"negative mass {self.f.min():.3e}")
        drift = np.abs(self.masses() - 1.0)
        if drift.max() > tol:
            raise InvalidArgumentError(f"mass drift {drift.max():.3e} exceeds {tol}")


def _default_mu_rate():
    rate = [[0.0] * 3 for _ in range(3)]
    for s, j in INFLUENCE_PAIRS:
        rate[s.index][j.index] = 1.0
    return tuple(tuple(row) for row in rate)


@dataclass(frozen=True)
class KineticParams:
    """Transition parameters and encounter rates.

    ``mu_rate[s][j]`` is the rate at which subsystem ``s+1`` feels the moments
    of subsystem ``j+1`` (0-based indices).
    """

    alpha_tilde: float = 0.1
    beta: float = 0.3
    gamma_tilde: float = 0.9
    eta: tuple[float, float, float] = (1.0, 1.0, 1.0)
    mu_rate: tuple = field(default_factory=_default_mu_rate)

    def __post_init__(self):
        for name in ("alpha_tilde", "beta", "gamma_tilde"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise InvalidArgumentError(f"{name} must lie in [0, 1], got {v}")
        eta = tuple(float(x) for x in self.eta)
        if len(eta) != 3 or min(eta) < 0:
            raise InvalidArgumentError("eta needs three rates >= 0")
        rate = tuple(tuple(float(x) for x in row) for row in self.mu_rate)
        if len(rate) != 3 or any(len(row) != 3 for row in rate):
            raise InvalidArgumentError("mu_rate must be 3x3")
        for s in SubsystemId:
            for j in SubsystemId:
                v = rate[s.index][j.index]
                if v < 0:
                    raise InvalidArgumentError(f"mu_rate[{s.index}][{j.index}] must be >= 0")
                if v != 0 and (s, j) not in INFLUENCE_PAIRS:
                    raise InvalidArgumentError(
                        f"mu_rate[{s.index}][{j.index}] must be 0: "
                        f"{j.name} has no influence on {s.name}"
                    )
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "mu_rate", rate)

    def max_total_rate(self) -> float:
        """``max eta + max_s sum_j mu_rate[s][j]``, the Euler positivity scale."""
        return max(self.eta) + max(sum(row) for row in self.mu_rate)


# --- transition matrices -------------------------------------------------
#
# Matrices are indexed [from, to]; every row sums to 1.


@lru_cache(maxsize=None)
def _uniform_up(n: int) -> np.ndarray:
    m = np.zeros((n + 1, n + 1))
    for p in range(n + 1):
        m[p, p:] = 1.0 / (n - p + 1)
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _uniform_down(n: int) -> np.ndarray:
    m = np.zeros((n + 1, n + 1))
    m[0, 0] = 1.0
    for p in range(1, n + 1):
        m[p, :p] = 1.0 / p
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _step(n: int, shift: int, prob: float) -> np.ndarray:
    m = np.eye(n + 1)
    for h in range(n + 1):
        if 0 <= h + shift <= n:
            m[h, h] = 1.0 - prob
            m[h, h + shift] = prob
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _identity(n: int) -> np.ndarray:
    m = np.eye(n + 1)
    m.setflags(write=False)
    return m


def d_matrix(s: SubsystemId, grid: ActivityGrid, mean_u: float) -> np.ndarray:
    """nu-transition matrix for the ruler or competing group.

    Their D kernel ignores the field particle, so it reduces to one matrix
    chosen by the subsystem's own mean ``E_u``.
    """
    s = SubsystemId(s)
    if s is CITIZENS:
        raise InvalidArgumentError("citizen D kernel depends on the field particle; use kernel_D")
    return _uniform_up(grid.R) if at_least_half(mean_u) else _uniform_down(grid.R)


def _b(s, j, params, n, e_nu_j):
    up = at_least_half(e_nu_j)
    if s == RULER and j == CITIZENS:
        return _uniform_up(n) if up else _uniform_down(n)
    if s == RULER and j == COMPETING:
        return _step(n, -1, params.gamma_tilde) if up else _identity(n)
    if s == CITIZENS and j == RULER:
        return _step(n, +1, params.alpha_tilde) if up else _identity(n)
    if s == COMPETING and j == RULER:
        return _uniform_up(n) if up else _identity(n)
    raise InvalidArgumentError(f"{SubsystemId(j).name} has no influence on {SubsystemId(s).name}")


def b_matrix(s, j, params: KineticParams, grid: ActivityGrid, mean_j: Moments) -> np.ndarray:
    """u-transition matrix of subsystem ``s`` under the moments of ``j``."""
    return _b(SubsystemId(s), SubsystemId(j), params, grid.I, mean_j.e_nu)


def _check_index(name, v, n):
    if not (0 <= v <= n) or int(v) != v:
        raise InvalidArgumentError(f"{name}={v} outside 0..{n}")


def kernel_D(s, params: KineticParams, means: Moments, grid: ActivityGrid, h, p, k, q) -> np.ndarray:
    """Probability row over ``r`` for a candidate at ``(h, p)`` meeting ``(k, q)``.

    ``means`` are the first moments of subsystem ``s`` itself.
    """
    s = SubsystemId(s)
    for name, v, n in (("h", h, grid.I), ("p", p, grid.R), ("k", k, grid.I), ("q", q, grid.R)):
        _check_index(name, v, n)
    if s is CITIZENS:
        row = np.zeros(grid.R + 1)
        if h < k:
            row[q] += params.beta
            row[p] += 1.0 - params.beta
        else:
            row[p] = 1.0
        return row
    return d_matrix(s, grid, means.e_u)[p].copy()


def kernel_B(s, j, params: KineticParams, means_j: Moments, grid: ActivityGrid, h) -> np.ndarray:
    """Probability row over ``i`` for a candidate of ``s`` at ``u_h``."""
    _check_index("h", h, grid.I)
    return b_matrix(s, j, params, grid, means_j)[h].copy()


# --- fluxes ---------------------------------------------------------------


def _internal(s, params, grid, f, mass, m_u, e_u):
    eta = params.eta[s - 1]
    if s == CITIZENS:
        # candidate at wealth i copies the opinion of strictly wealthier fields
        richer = np.zeros_like(f)
        richer[:-1] = np.cumsum(f[:0:-1], axis=0)[::-1]
        richer_mass = richer.sum(axis=1)
        return eta * params.beta * (m_u[:, None] * richer - f * richer_mass[:, None])
    t = _uniform_up(grid.R) if at_least_half(e_u) else _uniform_down(grid.R)
    return eta * mass * (f @ t - f)


def _external(s, params, grid, f_all, e_nu):
    out = np.zeros(grid.shape)
    f = f_all[s - 1]
    for j in _SUBSYSTEMS:
        rate = params.mu_rate[s - 1][j - 1]
        if rate == 0.0:
            continue
        b = _b(s, j, params, grid.I, e_nu[j - 1])
        out += rate * (b.T @ f - f)
    return out


def flux_internal(s, params: KineticParams, d: Distribution) -> np.ndarray:
    """Net flow ``J_s`` from binary encounters within subsystem ``s``.

    The candidate keeps its u-index, so every u-row of the result sums to 0.
    """
    m_u = d.f.sum(axis=1)
    return _internal(SubsystemId(s), params, d.grid, d.f, m_u.sum(), m_u, float(m_u @ d.grid.u))


def flux_external(s, params: KineticParams, state: PopulationState) -> np.ndarray:
    """Net flow into subsystem ``s`` caused by the other subsystems' moments.

    The candidate keeps its nu-index, so every nu-column sums to 0.
    """
    e_nu = state.f.sum(axis=1) @ state.grid.nu
    return _external(SubsystemId(s), params, state.grid, state.f, e_nu)


def rhs_array(grid: ActivityGrid, f: np.ndarray, params: KineticParams) -> np.ndarray:
    """Time derivative of a stacked ``(3, I+1, R+1)`` table."""
    m_u = f.sum(axis=2)
    e_u = m_u @ grid.u
    e_nu = f.sum(axis=1) @ grid.nu
    mass = m_u.sum(axis=1)
    out = np.empty_like(f)
    for s in _SUBSYSTEMS:
        k = s - 1
        out[k] = _internal(s, params, grid, f[k], mass[k], m_u[k], e_u[k])
        out[k] += _external(s, params, grid, f, e_nu)
    return out


def rhs(state: PopulationState, params: KineticParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    d = rhs_array(state.grid, state.f, params)
    return d[0], d[1], d[2]
