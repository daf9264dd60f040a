"""
How much do the citizens matter in case III?
============================================

A weak ruler facing a strong opposition. The only channel through which
citizens act on the ruler is their mean opinion: at or above 1/2 it pushes
the ruler's power up, below 1/2 it pushes it down. A uniform opinion sits
exactly on 1/2, and the tie goes upward.
"""

import dataclasses

import numpy as np

from political_kinetics.scenarios import MarginalPair, case_profile, classify_monotonicity, run_case_study

base = case_profile("III")

# %%
# Sweep the citizens' (wealth, opinion) profile and report what the ruler does.
for wealth in ("poor", "uniform", "rich"):
    for opinion in ("weak", "medium", "uniform", "strong"):
        spec = dataclasses.replace(base, citizens=MarginalPair(wealth, opinion))
        res = run_case_study("III", spec=spec)
        nu1 = res.trajectory.series(1, "nu")
        e2nu = res.trajectory.series(2, "nu")[0]
        trend = "falls" if np.all(np.diff(nu1) <= 1e-12) else "recovers"
        print(f"citizens {wealth:7s}/{opinion:7s} E2_nu={e2nu:.2f}  "
              f"ruler E1_nu {nu1[0]:.3f} -> {nu1[-1]:.3f} ({trend}), "
              f"phase {classify_monotonicity(res.phase).value}")

# %%
# Wealth is irrelevant here; opinion decides. Medium opinion lands on
# exactly 1/2 as well, so it behaves like the uniform profile.
