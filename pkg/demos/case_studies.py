"""
Ruler, citizens and opposition: the four case studies
=====================================================

Each case fixes where the ruler and the competing group start in the
(wealth/power, propensity/opinion) plane and lets the kinetic model run
to t = 10. We watch the ruler's propensity to innovate E1_nu against
the opposition's political power E3_nu.
"""

from political_kinetics import IntegrationSettings
from political_kinetics.scenarios import classify_monotonicity, run_case_study

settings = IntegrationSettings(dt=0.01, t_end=10.0)


def summary(case_id):
    res = run_case_study(case_id, settings=settings)
    traj = res.trajectory
    nu1, nu3, u2 = traj.series(1, "nu"), traj.series(3, "nu"), traj.series(2, "u")
    print(f"case {case_id:8s} E1_nu {nu1[0]:.3f} -> {nu1[-1]:.3f}   "
          f"E3_nu {nu3[0]:.3f} -> {nu3[-1]:.3f}   E2_u {u2[0]:.3f} -> {u2[-1]:.3f}   "
          f"phase curve: {classify_monotonicity(res.phase).value}")
    return res


# %%
# Case I, strong ruler against a weak opposition. The opposition's power
# first sinks and then climbs once its wealth passes the midpoint, so the
# ruler's propensity traced against it bends back.
one = summary("I")
for c in one.trajectory.crossings:
    print(f"   E{c.subsystem}_{c.moment[2:]} crosses 1/2 at t={c.t:.2f}")

# %%
# Case II, strong ruler against a strong opposition.
summary("II")

# %%
# Case III, weak ruler against a strong opposition. With uniformly spread
# citizen opinion the ruler's power is pushed up, so propensity recovers.
# See citizen_opinion.py for how much this hinges on the citizens.
summary("III")

# %%
# Case IV: balanced ruler and opposition. Only the citizens differ.
summary("IV_poor")
summary("IV_rich")
