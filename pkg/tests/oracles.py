"""Independent reference implementations used by the tests.

Nothing here imports the kernels or fluxes of the package: transition rules
are re-coded from the model description with plain loops so that the
vectorised code is checked against a separate derivation.
"""

import itertools
import math

import numpy as np


def _means(f, I, R):
    e_u = sum(i / I * f[i, r] for i in range(I + 1) for r in range(R + 1))
    e_nu = sum(r / R * f[i, r] for i in range(I + 1) for r in range(R + 1))
    return e_u, e_nu


def _ge_half(x):
    return x >= 0.5 - 1e-12


def d_prob(s, h, p, k, q, r, R, beta, e_u_own):
    """P(nu_p -> nu_r) for a candidate (h, p) meeting field (k, q) in subsystem s."""
    if s == 2:
        if h < k:
            return beta * (r == q) + (1 - beta) * (r == p)
        return float(r == p)
    if _ge_half(e_u_own):
        return 1.0 / (R - p + 1) if r >= p else 0.0
    if p == 0:
        return float(r == 0)
    return 1.0 / p if r < p else 0.0


def b_prob(s, j, h, i, I, params, e_nu_j):
    """P(u_h -> u_i) for subsystem s under the moments of subsystem j."""
    up = _ge_half(e_nu_j)
    if (s, j) == (1, 2):
        if up:
            return 1.0 / (I - h + 1) if i >= h else 0.0
        if h == 0:
            return float(i == 0)
        return 1.0 / h if i < h else 0.0
    if (s, j) == (1, 3):
        if up and h > 0:
            return params.gamma_tilde * (i == h - 1) + (1 - params.gamma_tilde) * (i == h)
        return float(i == h)
    if (s, j) == (2, 1):
        if up and h < I:
            return params.alpha_tilde * (i == h + 1) + (1 - params.alpha_tilde) * (i == h)
        return float(i == h)
    if (s, j) == (3, 1):
        if up:
            return 1.0 / (I - h + 1) if i >= h else 0.0
        return float(i == h)
    return float(i == h)


def brute_rhs(f, params):
    """Exhaustive gain/loss enumeration of df/dt for a ``(3, I+1, R+1)`` state."""
    _, I1, R1 = f.shape
    I, R = I1 - 1, R1 - 1
    means = [_means(f[s], I, R) for s in range(3)]
    out = np.zeros_like(f)
    for s in (1, 2, 3):
        fs = f[s - 1]
        eta = params.eta[s - 1]
        total = fs.sum()
        for i, r in itertools.product(range(I1), range(R1)):
            gain = 0.0
            for p, k, q in itertools.product(range(R1), range(I1), range(R1)):
                gain += d_prob(s, i, p, k, q, r, R, params.beta, means[s - 1][0]) * fs[i, p] * fs[k, q]
            val = eta * (gain - fs[i, r] * total)
            for j in (1, 2, 3):
                if j == s:
                    continue
                rate = params.mu_rate[s - 1][j - 1]
                inflow = sum(b_prob(s, j, h, i, I, params, means[j - 1][1]) * fs[h, r] for h in range(I1))
                val += rate * (inflow - fs[i, r])
            out[s - 1, i, r] = val
    return out


def random_state(rng, I, R, sparsity=0.0):
    f = rng.random((3, I + 1, R + 1))
    if sparsity:
        f[rng.random(f.shape) < sparsity] = 0.0
    f[:, 0, 0] += 1e-3
    return f / f.sum(axis=(1, 2), keepdims=True)


def innovation_closed_form(mu, gamma, alpha):
    """F evaluated branch by branch, without clipping helpers."""

    def P(h):
        if h < 0:
            return 0.0
        if h > 1:
            return 1.0
        return h

    return alpha * P(0.5 + mu) - P(0.5 + gamma * mu - (alpha - 1))


def dense_sign_scan(gamma, alpha, mu_lo, mu_hi, step=1e-6):
    """Blocking intervals by brute-force sign scan; endpoints are grid points."""
    n = int(math.floor((mu_hi - mu_lo) / step)) + 1
    mu = mu_lo + step * np.arange(n)
    F = alpha * np.clip(0.5 + mu, 0, 1) - np.clip(0.5 + gamma * mu - (alpha - 1), 0, 1)
    neg = F < 0
    out = []
    k = 0
    while k < n:
        if neg[k]:
            start = k
            while k < n and neg[k]:
                k += 1
            out.append((mu[start], mu[k - 1]))
        k += 1
    return out
