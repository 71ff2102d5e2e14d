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
# # Energy per useful bit
#
# With error rate b, Shannon's limit needs n = 1/I(b) symbols per useful
# bit. Copying a fair bit raises each medium's mean energy from delta*b to
# delta/2, so one useful bit costs
#
#     W = n (delta/2 - delta b) = delta (1/2 - b) / I(b).
#
# A wide gap means few, expensive symbols. A narrow gap means many cheap
# ones. The narrow end wins.

# %%
import math

import numpy as np

from thermocopy import copy_bound, energy_report, sweep, ThermalMedium

# %%
r = energy_report(ThermalMedium(beta=1.0, delta=1.0))
print(r)

# %% [markdown]
# W increases with delta. Its floor, reached as delta -> 0, is ln(4)/beta:
# twice the kT ln 2 of erasing a bit.

# %%
for k in range(1, 7):
    d = 10.0**-k
    w = energy_report(ThermalMedium(1.0, d)).w_per_useful_bit
    print(f"delta = 1e-{k}: W = {w:.12f}")
print("ln 4 =", copy_bound(1.0))

# %% [markdown]
# The curve for beta = 1, with the straight line delta/2 it approaches
# once b becomes negligible.

# %%
rows = sweep(1.0, 0.01, 10.0, 200, "log")
delta = np.array([row.delta for row in rows])
w = np.array([row.w for row in rows])
print("strictly increasing:", bool(np.all(np.diff(w) > 0)), " above delta/2:", bool(np.all(w >= delta / 2)))

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    lin = sweep(1.0, 0.01, 10.0, 200, "linear")
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot([row.delta for row in lin], [row.w for row in lin], label="W(beta=1, delta)")
    ax.plot([0, 10], [0, 5], "--", label="delta / 2")
    ax.axhline(math.log(4), color="grey", lw=0.8, label="ln 4")
    ax.set_xlabel("delta")
    ax.set_ylabel("energy per useful bit")
    ax.legend()
    fig.savefig("energy_per_useful_bit.png", dpi=120, bbox_inches="tight")
