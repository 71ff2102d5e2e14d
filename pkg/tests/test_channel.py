import numpy as np
import pytest

from oracles import binary_info, four_term_mi
from thermocopy.channel import (
    ChannelJoint,
    joint_distribution,
    mutual_information,
    mutual_information_symmetric,
)
from thermocopy.copier import MediumNoise, SourceDistribution, copy_closed_form

B_GRID = np.linspace(0.0, 1.0, 101)


def joint(p0, b):
    return joint_distribution(SourceDistribution(p0), MediumNoise(b))


@pytest.mark.parametrize(
    "p0, b, table",
    [
        (0.5, 0.0, [[0.5, 0], [0, 0.5]]),
        (0.5, 0.5, [[0.25, 0.25], [0.25, 0.25]]),
        (0.7, 0.1, [[0.63, 0.07], [0.03, 0.27]]),
    ],
)
def test_joint_table(p0, b, table):
    assert np.allclose(joint(p0, b).p_xy, table, atol=1e-12, rtol=0)


def test_joint_marginals():
    j = joint(0.7, 0.1)
    assert np.allclose(j.p_x, [0.7, 0.3], atol=1e-12)
    assert np.allclose(j.p_y, [0.66, 0.34], atol=1e-12)
    assert np.allclose(j.transition, [[0.9, 0.1], [0.1, 0.9]], atol=1e-12)


def test_joint_validation():
    with pytest.raises(ValueError):
        ChannelJoint.from_table([[0.5, 0.5], [0.5, 0.5]])
    with pytest.raises(ValueError):
        ChannelJoint([[0.5, 0], [0, 0.5]], [0.5, 0.5], [0.6, 0.4])
    with pytest.raises(ValueError):
        ChannelJoint.from_table([[1.5, -0.5], [0, 0]])


def test_transition_with_empty_row():
    assert np.array_equal(joint(1.0, 0.2).transition, [[0.8, 0.2], [0.0, 0.0]])


def test_mi_endpoints_are_exact():
    assert mutual_information(joint(0.5, 0.0)) == 1.0
    assert mutual_information(joint(0.5, 0.5)) == 0.0
    assert mutual_information_symmetric(MediumNoise(0.0)) == 1.0
    assert mutual_information_symmetric(MediumNoise(0.5)) == 0.0
    assert mutual_information_symmetric(MediumNoise(1.0)) == 1.0


def test_mi_quarter_noise():
    # four-term sum at 50 digits: 0.18872187554086713...
    assert mutual_information(joint(0.5, 0.25)) == pytest.approx(0.18872187554086714, rel=1e-13)
    assert abs(mutual_information(joint(0.5, 0.25)) - 0.188722) < 5e-7


def test_symmetric_formula_tenth():
    # 50-digit value 0.53100440641071876...
    val = mutual_information_symmetric(MediumNoise(0.1))
    assert val == pytest.approx(0.5310044064107188, rel=1e-13)
    assert val == pytest.approx(mutual_information(joint(0.5, 0.1)), abs=1e-12)


@pytest.mark.parametrize("p0, b", [(0.7, 0.1), (0.2, 0.35), (0.9, 0.8), (0.05, 0.01)])
def test_mi_matches_high_precision_sum(p0, b):
    j = joint(p0, b)
    assert mutual_information(j) == pytest.approx(float(four_term_mi(j.p_xy.tolist())), abs=1e-14)


def test_general_formula_agrees_with_symmetric_on_grid():
    for b in B_GRID:
        noise = MediumNoise(float(b))
        assert abs(mutual_information(joint(0.5, b)) - mutual_information_symmetric(noise)) <= 1e-12
        assert abs(mutual_information_symmetric(noise) - float(binary_info(float(b)))) <= 1e-14


def test_symmetry_under_negation():
    for b in B_GRID:
        i_b = mutual_information_symmetric(MediumNoise(float(b)))
        i_nb = mutual_information_symmetric(MediumNoise(1.0 - float(b)))
        assert abs(i_b - i_nb) <= 1e-12


def test_monotone_decrease_on_lower_half():
    vals = [mutual_information_symmetric(MediumNoise(float(b))) for b in np.linspace(0, 0.5, 101)]
    assert all(a > c for a, c in zip(vals, vals[1:]))
    assert 0.0 <= min(vals) and max(vals) <= 1.0


@pytest.mark.parametrize("p0", [i / 10 for i in range(11)])
def test_y_marginal_equals_copied_medium(p0):
    for b in [i / 10 for i in range(11)]:
        j = joint(p0, b)
        res = copy_closed_form(SourceDistribution(p0), MediumNoise(b))
        assert np.max(np.abs(j.p_y - res.reduced_b.diagonal())) <= 1e-12
