"""Minimum energy needed to copy a bit of useful information onto a thermal medium.

Modules
-------
densmat    dense 2x2 / 4x4 density-matrix kernel
copier     copier unitary, input states, dense and closed-form copying
channel    the induced binary channel and its transinformation
thermo     Gibbs populations of the two-level medium
energy     redundancy and energy per useful bit
mc_oracle  seeded Monte Carlo checks
cli        command-line front end
"""

from .channel import (
    ChannelJoint,
    joint_distribution,
    mutual_information,
    mutual_information_symmetric,
)
from .copier import (
    CopyResult,
    MediumNoise,
    SourceDistribution,
    copier_unitary,
    copy_closed_form,
    copy_dense,
    copy_pure_input,
    medium_state,
    overwrite_map,
    source_state,
)
from .densmat import (
    DensityMatrix,
    DensityMatrixError,
    conjugate_by_unitary,
    is_unitary,
    partial_trace,
    tensor,
    validate_density,
)
from .energy import (
    EnergyReport,
    SweepRow,
    copy_bound,
    energy_per_useful_bit,
    energy_report,
    redundancy,
    sweep,
)
from .mc_oracle import (
    ChannelCounts,
    McConfig,
    empirical_energy_audit,
    empirical_mutual_information,
    mutual_information_std_error,
    simulate_channel,
)
from .thermo import Occupation, ThermalMedium, delta_for_error_rate, error_rate, occupation

__version__ = "0.1.0"
