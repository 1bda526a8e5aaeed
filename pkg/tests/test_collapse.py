import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcollapse import (
    CMConditionReport,
    DomainError,
    LinearDependenceError,
    MeasurementSet,
    SingularOverlapError,
    branch_coefficients,
    branch_pair_from_overlap,
    cm_single,
    collapsed_outcomes,
    helstrom_success_probability,
    mary_cm,
    superposition,
    two_branch_inner,
)

Z_GRID = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]


def test_cm_single_orthogonal_branches():
    cm = cm_single(0.0)
    assert np.allclose(cm.xi_minus, [1.0, 0.0])
    assert np.allclose(cm.xi_plus, [0.0, 1.0])


def test_cm_single_closed_form_overlaps():
    cm = cm_single(0.6)
    phi = np.array([1.0, 0.0])
    uphi = np.array([0.6, 0.8])
    assert abs(np.dot(phi, cm.xi_plus) ** 2 - 0.1) < 1e-12
    assert abs(np.dot(uphi, cm.xi_plus) ** 2 - 0.9) < 1e-12


def test_cm_single_branch_coefficient_closed_form():
    z = 0.6
    cm = cm_single(z)
    a, b, d = math.sqrt(1 - z), math.sqrt(1 + z), 2 * math.sqrt(1 - z * z)
    on_phi, on_uphi = branch_coefficients(cm.xi_plus, z)
    assert abs(on_phi - (a - b) / d) < 1e-12
    assert abs(on_uphi - (a + b) / d) < 1e-12
    on_phi, on_uphi = branch_coefficients(cm.xi_minus, z)
    assert abs(on_phi - (a + b) / d) < 1e-12
    assert abs(on_uphi - (a - b) / d) < 1e-12


@pytest.mark.parametrize("z", Z_GRID)
def test_cm_single_invariants(z):
    cm = cm_single(z)
    assert abs(np.vdot(cm.xi_plus, cm.xi_minus)) < 1e-12
    assert abs(np.linalg.norm(cm.xi_plus) - 1.0) < 1e-12
    assert abs(np.linalg.norm(cm.xi_minus) - 1.0) < 1e-12
    psi = np.array([1.0 + z, math.sqrt(1 - z * z)]) / math.sqrt(2 + 2 * z)
    assert abs(np.dot(psi, cm.xi_plus) ** 2 - 0.5) < 1e-12
    assert abs(np.dot(psi, cm.xi_minus) ** 2 - 0.5) < 1e-12


@pytest.mark.parametrize("z", Z_GRID)
def test_spectral_identity(z):
    cm = cm_single(z)
    phi = np.array([1.0, 0.0])
    uphi = np.array([z, math.sqrt(1 - z * z)])
    observable = np.outer(phi, phi) - np.outer(uphi, uphi)
    rebuilt = math.sqrt(1 - z * z) * (
        np.outer(cm.xi_minus, cm.xi_minus) - np.outer(cm.xi_plus, cm.xi_plus)
    )
    assert np.abs(observable - rebuilt).max() < 1e-10


def test_cm_single_sign_convention():
    # xi_minus stays closest to |phi>, with a real positive |phi> component.
    for z in Z_GRID:
        cm = cm_single(z)
        assert cm.xi_minus[0] > 0
        assert abs(cm.xi_minus[0]) ** 2 >= abs(cm.xi_plus[0]) ** 2


@pytest.mark.parametrize("z", [1e-3, 1e-4])
def test_near_unit_overlap_small_z(z):
    cm = cm_single(z)
    uphi = np.array([z, math.sqrt(1 - z * z)])
    deficit = 1.0 - np.dot(uphi, cm.xi_plus) ** 2
    assert deficit < 0.3 * z * z


def test_cm_single_singular_guard():
    with pytest.raises(SingularOverlapError):
        cm_single(1 - 1e-9)


def test_helstrom_success_probability_values():
    assert helstrom_success_probability(0.0) == 1.0
    assert abs(helstrom_success_probability(0.6) - 0.9) < 1e-15
    assert abs(helstrom_success_probability(1 - 1e-12) - 0.5) < 1e-5
    with pytest.raises(DomainError):
        helstrom_success_probability(1.0)


def test_collapsed_outcomes_orthogonal_branches():
    omega_plus, omega_minus = collapsed_outcomes(branch_pair_from_overlap(0.0), 4)
    assert omega_minus.c0 == 1.0 and omega_minus.c1 == 0.0
    assert omega_plus.c0 == 0.0 and omega_plus.c1 == 1.0


def test_collapsed_outcomes_z_half_three_modes():
    pair = branch_pair_from_overlap(0.5)
    omega_plus, omega_minus = collapsed_outcomes(pair, 3)
    zn = 0.125
    a, b, d = math.sqrt(1 - zn), math.sqrt(1 + zn), 2 * math.sqrt(1 - zn * zn)
    assert abs(omega_plus.c0 - (a - b) / d) < 1e-15
    assert abs(omega_plus.c1 - (a + b) / d) < 1e-15
    psi = superposition(pair, 3)
    assert abs(abs(two_branch_inner(omega_plus, psi)) ** 2 - 0.5) < 1e-12
    assert abs(abs(two_branch_inner(omega_minus, psi)) ** 2 - 0.5) < 1e-12
    assert abs(two_branch_inner(omega_plus, omega_minus)) < 1e-12


def test_collapsed_outcomes_single_mode_matches_cm():
    z = 0.7
    cm = cm_single(z)
    omega_plus, omega_minus = collapsed_outcomes(branch_pair_from_overlap(z), 1)
    plus_phi, plus_uphi = branch_coefficients(cm.xi_plus, z)
    minus_phi, minus_uphi = branch_coefficients(cm.xi_minus, z)
    assert abs(omega_plus.c0 - plus_phi) < 1e-12
    assert abs(omega_plus.c1 - plus_uphi) < 1e-12
    assert abs(omega_minus.c0 - minus_phi) < 1e-12
    assert abs(omega_minus.c1 - minus_uphi) < 1e-12


def test_mary_cm_matches_binary_construction():
    z = 0.6
    result = mary_cm([[1.0, z], [z, 1.0]])
    assert isinstance(result, MeasurementSet)
    cm = cm_single(z)
    phi = np.array([1.0, 0.0])
    uphi = np.array([z, math.sqrt(1 - z * z)])
    binary = np.array(
        [
            [np.dot(phi, cm.xi_minus), np.dot(phi, cm.xi_plus)],
            [np.dot(uphi, cm.xi_minus), np.dot(uphi, cm.xi_plus)],
        ]
    )
    # same overlap pattern up to per-vector global phases
    assert np.abs(np.abs(result.state_overlaps) - np.abs(binary)).max() < 1e-10


def test_mary_cm_symmetric_three_branches():
    gram = np.full((3, 3), 0.3)
    np.fill_diagonal(gram, 1.0)
    result = mary_cm(gram)
    assert isinstance(result, MeasurementSet)
    assert result.conditions.orthonormality < 1e-10
    assert result.conditions.state_probability < 1e-10
    assert result.conditions.permutation_covariance < 1e-10
    # permutation covariance restated on the overlap matrix itself
    overlaps = result.state_overlaps
    for i, j in itertools.combinations(range(3), 2):
        order = list(range(3))
        order[i], order[j] = order[j], order[i]
        assert np.abs(overlaps - overlaps[np.ix_(order, order)]).max() < 1e-10


def test_mary_cm_asymmetric_reports_residuals():
    gram = np.array([[1.0, 0.1, 0.5], [0.1, 1.0, 0.9], [0.5, 0.9, 1.0]])
    assert (np.linalg.eigvalsh(gram) > 0).all()
    result = mary_cm(gram)
    assert isinstance(result, CMConditionReport)
    assert not result.satisfied
    assert result.orthonormality < 1e-10  # square-root vectors stay orthonormal
    assert result.state_probability > 1e-3
    assert result.permutation_covariance > 1e-3


def test_mary_cm_rejects_bad_input():
    with pytest.raises(LinearDependenceError):
        mary_cm([[1.0, 1.0], [1.0, 1.0]])
    with pytest.raises(DomainError):
        mary_cm([[1.0]])
    with pytest.raises(DomainError):
        mary_cm([[1.0, 0.2], [0.3, 1.0]])
    with pytest.raises(DomainError):
        mary_cm([[1.0, 0.2 + 0.1j], [0.2 - 0.1j, 1.0]])


@settings(max_examples=40, deadline=None)
@given(z=st.floats(min_value=0.0, max_value=0.9))
def test_cm_single_properties(z):
    cm = cm_single(z)
    assert abs(np.vdot(cm.xi_plus, cm.xi_minus)) < 1e-12
    success = np.dot(np.array([z, math.sqrt(1 - z * z)]), cm.xi_plus) ** 2
    assert abs(success - helstrom_success_probability(z)) < 1e-12
