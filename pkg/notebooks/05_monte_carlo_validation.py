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
# # Sampling the channel and the media
#
# Independent check of the closed forms: draw source bits and medium
# states, count, and compare. Runs are seeded with a counter-based Philox
# stream per block of trials, so a seed reproduces the same counts on any
# number of workers.

# %%
from thermocopy import (
    McConfig,
    MediumNoise,
    ThermalMedium,
    empirical_energy_audit,
    empirical_mutual_information,
    energy_report,
    mutual_information_std_error,
    mutual_information_symmetric,
    simulate_channel,
)

TRIALS = 200_000
SEED = 2024

# %%
for b in (0.05, 0.1, 0.25):
    counts = simulate_channel(McConfig(TRIALS, SEED, 0.5, b))
    est, se = empirical_mutual_information(counts), mutual_information_std_error(counts)
    exact = mutual_information_symmetric(MediumNoise(b))
    print(f"b = {b}: I_emp = {est:.5f} +- {se:.5f}, exact {exact:.5f}, z = {(est - exact) / se:+.2f}")

# %%
counts = simulate_channel(McConfig(TRIALS, SEED, 0.5, 0.1), workers=4)
print("same counts with 4 workers:", counts == simulate_channel(McConfig(TRIALS, SEED, 0.5, 0.1)))

# %% [markdown]
# Energy audit: sample thermal media, copy fair bits onto them, average the
# energies before and after.

# %%
for delta in (0.5, 1.0, 5.0, 20.0):
    medium = ThermalMedium(1.0, delta)
    print(
        f"delta = {delta:5}: sampled W = {empirical_energy_audit(medium, TRIALS, SEED):.4f}, "
        f"closed form {energy_report(medium).w_per_useful_bit:.4f}"
    )
