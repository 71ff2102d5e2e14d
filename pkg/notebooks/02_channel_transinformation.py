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
# # Copying as a binary channel
#
# Reading A before and B after copying gives a pair of bits (X, Y). Their
# joint distribution is a binary symmetric channel with crossover
# probability b. The transinformation I(X, Y) says how much of a copied
# bit is useful.

# %%
import numpy as np

from thermocopy import (
    MediumNoise,
    SourceDistribution,
    joint_distribution,
    mutual_information,
    mutual_information_symmetric,
)

# %%
j = joint_distribution(SourceDistribution(0.7), MediumNoise(0.1))
print("P(X, Y) =\n", j.p_xy)
print("P(Y) =", j.p_y, " transition P(Y|X) =\n", j.transition)
print("I(X, Y) =", mutual_information(j), "bits")

# %% [markdown]
# For a fair source the general sum reduces to 1 - H2(b). Both routes agree.

# %%
for b in (0.0, 0.05, 0.1, 0.25, 0.5):
    general = mutual_information(joint_distribution(SourceDistribution(0.5), MediumNoise(b)))
    closed = mutual_information_symmetric(MediumNoise(b))
    print(f"b = {b:4}: I = {closed:.6f}  (general sum {general:.6f})")

# %% [markdown]
# I(b) falls from 1 bit at b = 0 to 0 at b = 1/2, and is symmetric about
# 1/2 since b = 1 is just a negated faithful copy.

# %%
bs = np.linspace(0, 1, 11)
print([round(mutual_information_symmetric(MediumNoise(float(b))), 4) for b in bs])
