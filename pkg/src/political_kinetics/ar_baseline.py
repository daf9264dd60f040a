"""Macroscopic innovation function of the ruler/competition model.

The innovation function compares the ruler's payoff from innovating with the
payoff from blocking::

    F(mu, gamma; alpha) = alpha * P[1/2 + mu] - P[1/2 + gamma*mu - (alpha - 1)]

where ``P`` clamps to the unit interval, ``mu`` is the inverse level of
political competition, ``gamma`` the erosion of power caused by innovation and
``alpha`` the production gain.  Blocking happens where ``F < 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketError, InvalidArgumentError

__all__ = [
    "ARParams",
    "MuInterval",
    "Raster",
    "PUBLISHED_NONNEGATIVE_ALPHA",
    "clamp_unit",
    "innovation_function",
    "innovation_value",
    "is_blocking",
    "blocking_intervals",
    "min_alpha_nonnegative",
    "min_alpha_linear",
    "nonnegative_threshold_report",
    "raster",
]

# Threshold value quoted in the literature for gamma = 2; our closed form gives
# (sqrt(33) - 1) / 4 on mu in (0, 1).  Kept for side-by-side reporting.
PUBLISHED_NONNEGATIVE_ALPHA = 1.167

_ROOT_FTOL = 1e-10
_ROOT_XTOL = 1e-12


@dataclass(frozen=True)
class ARParams:
    mu: float
    gamma: float
    alpha: float

    def __post_init__(self):
        _check_domain(self.mu, self.gamma, self.alpha)


@dataclass(frozen=True)
class MuInterval:
    """Open interval ``(lo, hi)`` of mu values on which blocking holds."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (0 < self.lo < self.hi):
            raise InvalidArgumentError(f"need 0 < lo < hi, got ({self.lo}, {self.hi})")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Raster:
    """F sampled on a tensor grid; ``values[g, m]`` is F at ``(mu[m], gamma[g])``."""

    mu: np.ndarray
    gamma: np.ndarray
    alpha: float
    values: np.ndarray

    def triples(self) -> list[tuple[float, float, float]]:
        """Row-major ``(mu, gamma, F)`` triples, gamma varying slowest."""
        return [
            (float(m), float(g), float(self.values[gi, mi]))
            for gi, g in enumerate(self.gamma)
            for mi, m in enumerate(self.mu)
        ]


def _check_domain(mu, gamma, alpha):
    for name, v in (("mu", mu), ("gamma", gamma), ("alpha", alpha)):
        if not np.all(np.isfinite(v)):
            raise InvalidArgumentError(f"{name} must be finite")
    if np.any(np.asarray(mu) <= 0):
        raise InvalidArgumentError("mu must be > 0")
    if np.any(np.asarray(gamma) <= 1):
        raise InvalidArgumentError("gamma must be > 1")
    if np.any(np.asarray(alpha) < 1):
        raise InvalidArgumentError("alpha must be >= 1")


def clamp_unit(h: float) -> float:
    """Clamp ``h`` to [0, 1]."""
    if not math.isfinite(h):
        raise InvalidArgumentError(f"clamp_unit needs a finite value, got {h!r}")
    if h < 0:
        return 0.0
    if h > 1:
        return 1.0
    return float(h)


def _F(mu, gamma, alpha):
    # unchecked, broadcasts over arrays
    return alpha * np.clip(0.5 + mu, 0.0, 1.0) - np.clip(
        0.5 + gamma * mu - (alpha - 1.0), 0.0, 1.0
    )


def innovation_function(mu, gamma, alpha):
    """Vectorised F(mu, gamma; alpha) with domain checks."""
    _check_domain(mu, gamma, alpha)
    return _F(np.asarray(mu, dtype=float), gamma, alpha)


def innovation_value(p: ARParams) -> float:
    return p.alpha * clamp_unit(0.5 + p.mu) - clamp_unit(
        0.5 + p.gamma * p.mu - (p.alpha - 1.0)
    )


def is_blocking(p: ARParams) -> bool:
    """True when innovating pays strictly less than blocking (F < 0)."""
    return innovation_value(p) < 0


def _check_range(mu_lo, mu_hi):
    if not (math.isfinite(mu_lo) and math.isfinite(mu_hi)):
        raise InvalidArgumentError("mu range must be finite")
    if not (0 < mu_lo < mu_hi):
        raise InvalidArgumentError(f"need 0 < mu_lo < mu_hi, got ({mu_lo}, {mu_hi})")


def _mu_grid(mu_lo, mu_hi, step):
    n = int(math.floor((mu_hi - mu_lo) / step + 1e-9))
    grid = mu_lo + step * np.arange(n + 1)
    if grid[-1] < mu_hi:
        grid = np.append(grid, mu_hi)
    return grid


def _refine(f, a, b):
    """Bisect for the sign change of ``f`` between ``a`` (F<0) and ``b`` (F>=0)."""
    neg_at_a = f(a) < 0
    while abs(b - a) > _ROOT_XTOL:
        m = 0.5 * (a + b)
        fm = f(m)
        if abs(fm) <= _ROOT_FTOL:
            return m
        if (fm < 0) == neg_at_a:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def blocking_intervals(gamma, alpha, mu_lo, mu_hi, step=1e-4) -> list[MuInterval]:
    """Maximal mu-intervals inside ``[mu_lo, mu_hi]`` where F < 0.

    A grid scan at ``step`` locates sign changes; each endpoint is then refined
    by bisection.  Intervals reaching the edge of the scan range end at that
    edge.
    """
    _check_range(mu_lo, mu_hi)
    if not step > 0:
        raise InvalidArgumentError("step must be > 0")
    _check_domain(mu_lo, gamma, alpha)

    def f(m):
        return float(_F(m, gamma, alpha))

    grid = _mu_grid(mu_lo, mu_hi, step)
    neg = _F(grid, gamma, alpha) < 0
    if not neg.any():
        return []
    padded = np.concatenate(([False], neg, [False]))
    edges = np.flatnonzero(np.diff(padded.astype(np.int8)))
    out = []
    for start, stop in zip(edges[::2], edges[1::2]):
        # grid[start:stop] is a maximal run of negative samples
        lo = mu_lo if start == 0 else _refine(f, grid[start], grid[start - 1])
        hi = mu_hi if stop == len(grid) else _refine(f, grid[stop - 1], grid[stop])
        out.append(MuInterval(float(lo), float(hi)))
    return out


def _kinks(gamma, alpha, mu_lo, mu_hi):
    # breakpoints of the piecewise-linear F in mu
    pts = np.array([0.5, (alpha - 1.5) / gamma, (alpha - 0.5) / gamma])
    return pts[(pts >= mu_lo) & (pts <= mu_hi)]


def _min_F(gamma, alpha, mu_lo, mu_hi, n_scan):
    mus = np.concatenate(
        (np.linspace(mu_lo, mu_hi, n_scan), _kinks(gamma, alpha, mu_lo, mu_hi))
    )
    return float(_F(mus, gamma, alpha).min())


def _bisect_alpha(pred, lo, hi, tol):
    """Smallest alpha in [lo, hi] with ``pred`` true, assuming monotonicity."""
    if pred(lo) or not pred(hi):
        raise BracketError(f"no sign change for alpha in [{lo}, {hi}]")
    while hi - lo > tol:
        m = 0.5 * (lo + hi)
        if pred(m):
            hi = m
        else:
            lo = m
    return hi


def min_alpha_nonnegative(gamma, mu_lo, mu_hi, tol=1e-6, n_scan=20001) -> float:
    """Smallest alpha for which F >= 0 on all of ``[mu_lo, mu_hi]``.

    The inner minimisation over mu uses a dense scan augmented with the
    breakpoints of the piecewise-linear F, so the minimum is exact on each
    probe.
    """
    _check_range(mu_lo, mu_hi)
    if not gamma > 1:
        raise InvalidArgumentError("gamma must be > 1")
    if not tol > 0:
        raise InvalidArgumentError("tol must be > 0")
    upper = 1.5 + gamma * mu_hi
    return _bisect_alpha(
        lambda a: _min_F(gamma, a, mu_lo, mu_hi, n_scan) >= 0, 1.0, upper, tol
    )


def min_alpha_linear(gamma, mu_lo, mu_hi, tol=1e-6, n_scan=20001) -> float:
    """Smallest alpha making the subtracted clamp vanish on ``[mu_lo, mu_hi]``.

    Analytically this is ``3/2 + gamma * mu_hi``; here it is located by
    bisection.  ``mu_lo`` may be 0 since only the clamp argument is probed.
    """
    if not (0 <= mu_lo < mu_hi and math.isfinite(mu_hi)):
        raise InvalidArgumentError(f"need 0 <= mu_lo < mu_hi, got ({mu_lo}, {mu_hi})")
    if not gamma > 1:
        raise InvalidArgumentError("gamma must be > 1")
    if not tol > 0:
        raise InvalidArgumentError("tol must be > 0")
    mus = np.linspace(mu_lo, mu_hi, n_scan)

    def linear(a):
        return bool(np.all(np.clip(0.5 + gamma * mus - (a - 1.0), 0.0, 1.0) == 0.0))

    return _bisect_alpha(linear, 1.0, 2.0 * (1.5 + gamma * mu_hi) + 1.0, tol)


def nonnegative_threshold_report(gamma=2.0, mu_lo=1e-4, mu_hi=1.0, tol=1e-6) -> dict:
    """Computed non-negativity threshold next to the published 1.167."""
    computed = min_alpha_nonnegative(gamma, mu_lo, mu_hi, tol)
    return {
        "gamma": gamma,
        "mu_lo": mu_lo,
        "mu_hi": mu_hi,
        "computed": computed,
        "published": PUBLISHED_NONNEGATIVE_ALPHA,
        "difference": computed - PUBLISHED_NONNEGATIVE_ALPHA,
        "agrees": abs(computed - PUBLISHED_NONNEGATIVE_ALPHA) <= tol,
    }


def raster(mu_range, gamma_range, alpha, n_mu, n_gamma) -> Raster:
    """Evaluate F on an ``n_gamma x n_mu`` tensor grid (gamma rows, mu columns)."""
    if n_mu < 1 or n_gamma < 1:
        raise InvalidArgumentError("n_mu and n_gamma must be >= 1")
    mu = np.linspace(mu_range[0], mu_range[1], n_mu) if n_mu > 1 else np.array([float(mu_range[0])])
    gamma = (
        np.linspace(gamma_range[0], gamma_range[1], n_gamma)
        if n_gamma > 1
        else np.array([float(gamma_range[0])])
    )
    _check_domain(mu, gamma, alpha)
    values = _F(mu[None, :], gamma[:, None], alpha)
    return Raster(mu=mu, gamma=gamma, alpha=float(alpha), values=values)
