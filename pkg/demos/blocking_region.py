"""
Where innovation gets blocked
=============================

The incumbent compares the value of innovating, alpha * P[1/2 + mu], with
the value of the replacement threat, P[1/2 + gamma mu - (alpha - 1)].
Blocking happens wherever the difference is negative.
"""

import numpy as np

from political_kinetics import ar_baseline

# %%
# A slice through the innovation function at alpha = 1.1, gamma = 2.
mus = np.array([0.05, 0.1, 1 / 6, 0.25, 0.3, 0.4, 9 / 22, 0.5, 0.8])
for mu in mus:
    F = ar_baseline.innovation_function(mu, 2.0, 1.1)
    print(f"mu={mu:6.4f}  F={float(F):+.4f}  {'blocking' if F < 0 else ''}")

# %%
# The blocking set is a single interval with endpoints 1/6 and 9/22.
for iv in ar_baseline.blocking_intervals(2.0, 1.1, 1e-4, 1.0):
    print(f"blocking on ({iv.lo:.6f}, {iv.hi:.6f})")

# %%
# Raising alpha shrinks the interval until it disappears.
for alpha in (1.0, 1.05, 1.1, 1.15, 1.18, 1.19, 1.3):
    ivs = ar_baseline.blocking_intervals(2.0, alpha, 1e-4, 1.0)
    width = sum(iv.hi - iv.lo for iv in ivs)
    print(f"alpha={alpha:4.2f}  blocked width={width:.4f}")

# %%
# Two thresholds. Past the first, F is never negative; past the second,
# the replacement term is clamped at zero and F is linear in mu.
rep = ar_baseline.nonnegative_threshold_report(2.0, 1e-4, 1.0)
print("non-negative from alpha =", round(rep["computed"], 6),
      "(published figure:", rep["published"], ")")
print("linear from alpha =", round(ar_baseline.min_alpha_linear(2.0, 0.0, 1.0, tol=1e-7), 6))

# %%
# A coarse (mu, gamma) map of the sign of F, '-' marking blocking.
r = ar_baseline.raster((0.02, 1.0), (1.1, 5.0), 1.1, 50, 12)
for g, row in zip(r.gamma, r.values):
    print(f"gamma={g:4.2f} " + "".join("-" if v < 0 else "." for v in row))
