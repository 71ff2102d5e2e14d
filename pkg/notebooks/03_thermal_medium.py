# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # A medium at temperature T
#
# The medium's two states are energy levels split by delta. In thermal
# equilibrium the upper level (the unprepared state) is occupied with the
# Gibbs probability, and that occupation is the copy error rate b.

# %%
import math

import numpy as np

from thermocopy import MediumNoise, ThermalMedium, delta_for_error_rate, error_rate, occupation

# %%
for x in (0.0, math.log(3), 1.0, 5.0, 20.0, 100.0):
    occ = occupation(ThermalMedium(beta=1.0, delta=x))
    print(f"beta*delta = {x:8.4f}: P0 = {occ.p0:.6f}, P1 = b = {occ.p1:.4e}")

# %% [markdown]
# Degenerate levels give b = 1/2, a useless medium. The logistic form stays
# finite far past the point where exp(beta*delta) would overflow.

# %%
print(error_rate(ThermalMedium(1.0, 700.0)).b)

# %% [markdown]
# The gap needed for a target error rate, and the round trip back.

# %%
for b in (0.4, 0.25, 0.1, 1e-3):
    d = delta_for_error_rate(2.0, MediumNoise(b))
    print(f"b = {b}: delta = {d:.6f} (beta = 2), back to b = {error_rate(ThermalMedium(2.0, d)).b:.6g}")

# %%
worst = max(
    abs(delta_for_error_rate(1.0, error_rate(ThermalMedium(1.0, float(x)))) / x - 1)
    for x in np.geomspace(1e-6, 50, 100)
)
print("worst relative round-trip error:", worst)
