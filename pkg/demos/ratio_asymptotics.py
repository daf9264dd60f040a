"""
Case V: the ratios F and G
==========================

F = E1_u / E3_nu sets the ruler's power against the opposition's power;
G = E1_nu / E3_nu sets the ruler's propensity to innovate against it.
Initial clusters are a free choice, so three are tried.
"""

from political_kinetics import IntegrationSettings
from political_kinetics.scenarios import run_case_v

results = run_case_v(settings=IntegrationSettings(dt=0.01, t_end=10.0))

# %%
for name, res in results.items():
    print(name)
    for s in res.trajectory.samples[::100]:
        F = "   -  " if s.F is None else f"{s.F:6.3f}"
        G = "   -  " if s.G is None else f"{s.G:6.3f}"
        print(f"  t={s.t:5.2f}  F={F}  G={G}")

# %%
# All three settle with G close to 1 and F a little above 0.8.
# The ruler's propensity ends level with the opposition's power.
