import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import unitary_group

from oracles import loop_partial_trace
from thermocopy.copier import copier_unitary, overwrite_map
from thermocopy.densmat import (
    DensityMatrix,
    DensityMatrixError,
    conjugate_by_unitary,
    is_unitary,
    partial_trace,
    tensor,
    validate_density,
)


def diag_state(*p):
    return DensityMatrix(np.diag(p))


def rho_ab(p0, b):
    return DensityMatrix(tensor(np.diag([p0, 1 - p0]), np.diag([1 - b, b])))


probs = st.floats(0.0, 1.0, allow_nan=False)


# -- tensor ---------------------------------------------------------------


def test_tensor_of_diagonals_orders_a_then_b():
    p0, p1, b = 0.7, 0.3, 0.1
    out = tensor(np.diag([p0, p1]), np.diag([1 - b, b]))
    assert np.allclose(out, np.diag([p0 * (1 - b), p0 * b, p1 * (1 - b), p1 * b]), atol=1e-12)


def test_tensor_identity():
    assert np.array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_numeric_example():
    out = tensor(np.diag([0.7, 0.3]), np.diag([0.9, 0.1]))
    assert np.allclose(np.diag(out).real, [0.63, 0.07, 0.27, 0.03], atol=1e-12, rtol=0)
    assert np.count_nonzero(out - np.diag(np.diag(out))) == 0


def test_tensor_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        tensor(np.eye(4), np.eye(2))
    with pytest.raises(ValueError):
        tensor(np.eye(2), np.eye(3))


@given(st.lists(probs, min_size=4, max_size=4))
def test_tensor_trace_is_multiplicative(vals):
    a, b = np.diag(vals[:2]), np.diag(vals[2:])
    assert abs(np.trace(tensor(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12


# -- conjugation ----------------------------------------------------------


def test_identity_conjugation():
    rho = rho_ab(0.7, 0.1)
    assert conjugate_by_unitary(rho, np.eye(4)).allclose(rho, atol=0)


def test_copier_on_fair_source_pure_medium():
    out = conjugate_by_unitary(rho_ab(0.5, 0.0), copier_unitary())
    assert out.allclose(np.diag([0.5, 0, 0, 0.5]))


def test_copier_swaps_medium_in_p1_block():
    out = conjugate_by_unitary(rho_ab(0.7, 0.1), copier_unitary())
    assert out.allclose(np.diag([0.63, 0.07, 0.03, 0.27]))


def test_conjugation_rejects_non_unitary():
    with pytest.raises(ValueError, match="unitary"):
        conjugate_by_unitary(rho_ab(0.5, 0.2), overwrite_map())


@settings(max_examples=50)
@given(st.lists(st.floats(0.0, 1.0), min_size=4, max_size=4).filter(lambda v: sum(v) > 1e-3),
       st.integers(0, 2**32 - 1))
def test_conjugation_preserves_trace_and_spectrum(weights, seed):
    w = np.array(weights) / sum(weights)
    rho = DensityMatrix(np.diag(w))
    u = unitary_group.rvs(4, random_state=seed)
    out = conjugate_by_unitary(rho, u)
    assert abs(out.trace() - 1) <= 1e-12
    assert np.allclose(np.linalg.eigvalsh(out.matrix), np.sort(w), atol=1e-12, rtol=0)


@given(st.floats(0, 1), st.floats(0, 1))
def test_copier_output_diagonal_is_permutation_of_input(p0, b):
    rho = rho_ab(p0, b)
    out = conjugate_by_unitary(rho, copier_unitary())
    assert np.array_equal(out.diagonal(), rho.diagonal()[[0, 1, 3, 2]])


# -- partial trace --------------------------------------------------------


def test_partial_trace_keeps_source():
    after = conjugate_by_unitary(rho_ab(0.7, 0.1), copier_unitary())
    assert partial_trace(after, "A").allclose(np.diag([0.7, 0.3]))


@pytest.mark.parametrize("b", [0.0, 0.1, 0.37, 0.5, 1.0])
def test_partial_trace_fair_source_gives_uniform_copy(b):
    after = conjugate_by_unitary(rho_ab(0.5, b), copier_unitary())
    assert partial_trace(after, "B").allclose(np.diag([0.5, 0.5]))


def test_partial_trace_b_numeric():
    after = conjugate_by_unitary(rho_ab(0.7, 0.1), copier_unitary())
    assert partial_trace(after, "B").allclose(np.diag([0.66, 0.34]))


def test_partial_trace_rejects_bad_keep():
    with pytest.raises(ValueError):
        partial_trace(rho_ab(0.5, 0.5), "C")


def test_partial_trace_matches_index_loop_on_entangled_state():
    u = unitary_group.rvs(4, random_state=7)
    rho = conjugate_by_unitary(rho_ab(0.8, 0.3), u)
    for keep in "AB":
        assert np.max(np.abs(partial_trace(rho, keep).matrix - loop_partial_trace(rho.matrix, keep))) <= 1e-12


@given(probs, probs, probs, probs)
def test_partial_trace_of_product(p, q, r, s):
    # random 2x2 states with coherences: cos/sin mixture of a rotated pure state
    def state(x, y):
        psi = np.array([np.cos(np.pi * x), np.exp(2j * np.pi * y) * np.sin(np.pi * x)])
        return 0.5 * np.outer(psi, psi.conj()) + 0.25 * np.eye(2)

    ra, rb = state(p, q), state(r, s)
    prod = DensityMatrix(tensor(ra, rb))
    assert partial_trace(prod, "A").allclose(ra)
    assert partial_trace(prod, "B").allclose(rb)


@given(st.floats(0, 1), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_partial_trace_is_linear(lam, s1, s2):
    def random_state(seed):
        u = unitary_group.rvs(4, random_state=seed)
        return conjugate_by_unitary(rho_ab(0.6, 0.2), u)

    r1, r2 = random_state(s1), random_state(s2)
    mix = DensityMatrix(lam * r1.matrix + (1 - lam) * r2.matrix)
    for keep in "AB":
        lhs = partial_trace(mix, keep).matrix
        rhs = lam * partial_trace(r1, keep).matrix + (1 - lam) * partial_trace(r2, keep).matrix
        assert np.max(np.abs(lhs - rhs)) <= 1e-12


# -- is_unitary -----------------------------------------------------------


def test_identity_is_unitary():
    assert is_unitary(np.eye(4), 1e-15)


def test_overwrite_map_is_not_unitary():
    assert not is_unitary(overwrite_map(), 1e-12)


def test_copier_is_unitary():
    assert is_unitary(copier_unitary(), 1e-15)


def test_is_unitary_requires_positive_tol():
    with pytest.raises(ValueError):
        is_unitary(np.eye(2), 0.0)


# -- validate_density -----------------------------------------------------


def test_valid_density():
    rho = validate_density(np.diag([0.5, 0.5]))
    assert rho.dim == 2 and rho.purity() == pytest.approx(0.5)


def test_trace_violation_reports_trace():
    with pytest.raises(DensityMatrixError) as err:
        validate_density(np.diag([0.6, 0.6]))
    assert err.value.invariant == "trace"
    assert err.value.value == pytest.approx(1.2)
    assert err.value.violation == pytest.approx(0.2)


def test_psd_violation():
    with pytest.raises(DensityMatrixError) as err:
        validate_density(np.diag([1.2, -0.2]))
    assert err.value.invariant == "psd"
    assert err.value.violation == pytest.approx(0.2)


def test_hermiticity_violation():
    with pytest.raises(DensityMatrixError) as err:
        validate_density([[0.5, 0.1], [0.0, 0.5]])
    assert err.value.invariant == "hermitian"


def test_off_diagonal_psd_violation_is_caught():
    # diagonal looks fine but the coherence is too large
    with pytest.raises(DensityMatrixError) as err:
        validate_density([[0.5, 0.6], [0.6, 0.5]])
    assert err.value.invariant == "psd"


def test_bad_shape():
    with pytest.raises(ValueError):
        validate_density(np.eye(3) / 3)


def test_density_matrix_is_read_only():
    rho = validate_density(np.diag([0.5, 0.5]))
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0
