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
# # The copier
#
# Two qubits: A holds the bit to copy, B is the medium. The medium has a
# "pure" state `pm` (read as |0>) and an "unprepared" state `um` (|1>).
# The copier writes A's bit into B when B starts in `pm`. Making the map
# reversible forces it to flip B's bit when B starts in `um`.

# %%
import math

import numpy as np

from thermocopy import (
    MediumNoise,
    SourceDistribution,
    copier_unitary,
    copy_closed_form,
    copy_dense,
    copy_pure_input,
    is_unitary,
    overwrite_map,
    partial_trace,
)

np.set_printoptions(precision=4, suppress=True)

# %% [markdown]
# Basis order is |0 pm>, |0 um>, |1 pm>, |1 um>. The copier is a permutation
# matrix (a CNOT), so it is unitary and its own inverse.

# %%
U = copier_unitary()
print(U.real)
print("unitary:", is_unitary(U, 1e-15), " U^2 = I:", np.allclose(U @ U, np.eye(4)))

# %% [markdown]
# The tempting alternative sends both medium states to the copied bit. It
# throws away what B held before, so it is not unitary.

# %%
print("overwrite map unitary:", is_unitary(overwrite_map(), 1e-12))

# %% [markdown]
# ## Mixed inputs
#
# Source A stores 0 with probability p0; medium B is unprepared with
# probability b. We copy by explicit matrix simulation and compare with the
# closed-form populations.

# %%
dist, noise = SourceDistribution(0.7), MediumNoise(0.1)
dense = copy_dense(dist, noise)
closed = copy_closed_form(dist, noise)
print("joint after copying:", dense.joint_after.diagonal())
print("reduced A:", dense.reduced_a.diagonal(), " reduced B:", dense.reduced_b.diagonal())
print("dense == closed form:", dense.joint_after.allclose(closed.joint_after))

# %% [markdown]
# Three regimes for the medium noise: faithful copy, no information, and a
# faithful copy of the negated bit.

# %%
for b in (0.0, 0.5, 1.0):
    print(f"b = {b}: B after copying = {copy_dense(dist, MediumNoise(b)).reduced_b.diagonal()}")

# %% [markdown]
# ## Superpositions are not cloned
#
# Feeding (|0> + |1>)/sqrt(2) gives a Bell state. Each half alone is
# maximally mixed (purity 1/2), not a copy of the input.

# %%
s = 1 / math.sqrt(2)
bell = copy_pure_input(s, s)
print(bell.matrix.real)
print("purity of B:", partial_trace(bell, "B").purity())
