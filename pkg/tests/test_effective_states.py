import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcollapse import (
    DomainError,
    IncompatibleStateError,
    SingularOverlapError,
    TwoBranchState,
    branch_pair_from_overlap,
    collapsed_outcomes,
    overlap_power,
    qubit_branch_pair,
    superposition,
    two_branch_inner,
)


def test_branch_pair_orthogonal():
    pair = branch_pair_from_overlap(0.0)
    assert np.allclose(pair.basis_uphi, [0.0, 1.0])
    assert np.allclose(pair.basis_phi, [1.0, 0.0])


def test_branch_pair_three_four_five():
    pair = branch_pair_from_overlap(0.6)
    assert np.allclose(pair.basis_uphi, [0.6, 0.8], atol=1e-15)


def test_branch_pair_singular_guard():
    with pytest.raises(SingularOverlapError):
        branch_pair_from_overlap(0.999999999)


@pytest.mark.parametrize("bad", [-0.1, 1.0, 1.5])
def test_branch_pair_domain(bad):
    with pytest.raises(DomainError):
        branch_pair_from_overlap(bad)


def test_branch_pair_rejects_complex_overlap():
    with pytest.raises(DomainError):
        branch_pair_from_overlap(0.3 + 0.1j)


def test_qubit_branch_pair_angles():
    assert abs(qubit_branch_pair(math.pi / 2).z) < 1e-12
    assert abs(qubit_branch_pair(math.pi / 3).z - 0.5) < 1e-12
    assert qubit_branch_pair(0.7).theta == 0.7


@pytest.mark.parametrize("bad", [0.0, -0.2, math.pi / 2 + 0.01])
def test_qubit_branch_pair_domain(bad):
    with pytest.raises(DomainError):
        qubit_branch_pair(bad)


def test_superposition_orthogonal_single_mode():
    state = superposition(branch_pair_from_overlap(0.0), 1)
    assert abs(state.c0 - 1 / math.sqrt(2)) < 1e-15
    assert state.c0 == state.c1


def test_superposition_coefficient_value():
    # direct arithmetic: (2 + 2 * 0.9**2) ** -0.5
    state = superposition(branch_pair_from_overlap(0.9), 2)
    assert abs(state.c0 - 0.5255883312276367) < 1e-15


@pytest.mark.parametrize("z", [0.0, 0.25, 0.5, 0.75, 0.9])
@pytest.mark.parametrize("n", [1, 2, 5, 17])
def test_superposition_unit_norm(z, n):
    state = superposition(branch_pair_from_overlap(z), n)
    assert abs(two_branch_inner(state, state) - 1.0) < 1e-12


def test_inner_between_branches_is_overlap_power():
    z, n = 0.9, 2
    phi_branch = TwoBranchState(c0=1.0 + 0j, c1=0j, n_modes=n, z=z)
    rotated_branch = TwoBranchState(c0=0j, c1=1.0 + 0j, n_modes=n, z=z)
    assert abs(two_branch_inner(phi_branch, rotated_branch) - 0.81) < 1e-15


def test_inner_collapsed_outcomes_orthogonal():
    pair = branch_pair_from_overlap(0.5)
    omega_plus, omega_minus = collapsed_outcomes(pair, 3)
    assert abs(two_branch_inner(omega_plus, omega_minus)) < 1e-12


def test_inner_rejects_mismatched_states():
    a = superposition(branch_pair_from_overlap(0.5), 2)
    b = superposition(branch_pair_from_overlap(0.5), 3)
    c = superposition(branch_pair_from_overlap(0.4), 2)
    with pytest.raises(IncompatibleStateError):
        two_branch_inner(a, b)
    with pytest.raises(IncompatibleStateError):
        two_branch_inner(a, c)


def test_norm_invariant_rejects_bad_coefficients():
    with pytest.raises(DomainError):
        TwoBranchState(c0=1.0 + 0j, c1=1.0 + 0j, n_modes=2, z=0.5)


def test_overlap_power_matches_direct_and_underflows_cleanly():
    assert overlap_power(0.9, 3) == pytest.approx(0.729, abs=1e-15)
    assert overlap_power(0.0, 5) == 0.0
    assert abs(overlap_power(0.9, 100) - math.exp(100 * math.log(0.9))) < 1e-16
    assert overlap_power(0.5, 5000) == 0.0  # graceful underflow


def _random_state(z: float, n: int, seed: int) -> TwoBranchState:
    rng = np.random.default_rng(seed)
    c = rng.normal(size=2) + 1j * rng.normal(size=2)
    zn = overlap_power(z, n)
    norm_sq = abs(c[0]) ** 2 + abs(c[1]) ** 2 + 2 * (c[0].conjugate() * c[1] * zn).real
    c = c / math.sqrt(norm_sq)
    return TwoBranchState(c0=complex(c[0]), c1=complex(c[1]), n_modes=n, z=z)


@settings(max_examples=60, deadline=None)
@given(
    z=st.floats(min_value=0.0, max_value=0.95),
    n=st.integers(min_value=1, max_value=40),
    seed=st.integers(min_value=0, max_value=2**31),
)
def test_inner_conjugate_symmetry(z, n, seed):
    a = _random_state(z, n, seed)
    b = _random_state(z, n, seed + 1)
    assert two_branch_inner(a, b) == two_branch_inner(b, a).conjugate()
