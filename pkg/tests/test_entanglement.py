import math

import numpy as np
import pytest

from catcollapse import (
    DensityMatrix2,
    DomainError,
    InvalidStateError,
    NoCrossingError,
    branch_pair_from_overlap,
    collapsed_outcomes,
    entropy_crossing,
    entropy_sweep,
    reduced_state,
    superposition,
    von_neumann_entropy,
)
from catcollapse.oracle import dense_superposition, site_entropy, site_reduced

Z_GRID = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]


def _det_entropy(c0: complex, c1: complex, z: float) -> float:
    """Independent route: for c0|pp> + c1|uu> the reduced spectrum depends
    only on d = |c0 c1| (1 - z^2); the eigenvalues are (1 +- sqrt(1-4d^2))/2."""
    d = abs(c0 * c1) * (1 - z * z)
    lam = np.array([(1 + math.sqrt(1 - 4 * d * d)) / 2, (1 - math.sqrt(1 - 4 * d * d)) / 2])
    lam = lam[lam > 0]
    return float(-(lam * np.log(lam)).sum())


def test_reduced_state_bell_like():
    rho = reduced_state(superposition(branch_pair_from_overlap(0.0), 2))
    assert np.allclose(rho.matrix, np.diag([0.5, 0.5]), atol=1e-15)


def test_reduced_state_collapsed_orthogonal_is_pure():
    omega_plus, _ = collapsed_outcomes(branch_pair_from_overlap(0.0), 2)
    rho = reduced_state(omega_plus)
    assert np.allclose(rho.matrix, np.diag([0.0, 1.0]), atol=1e-15)


@pytest.mark.parametrize("z", Z_GRID)
def test_reduced_state_matches_dense(z):
    theta = math.acos(z)
    pair = branch_pair_from_overlap(z)
    for kind in ("superposition", "omega_plus"):
        if kind == "superposition":
            state = superposition(pair, 2)
        else:
            state, _ = collapsed_outcomes(pair, 2)
        rho = reduced_state(state).matrix
        dense = dense_superposition(theta, 2, kind)
        assert np.abs(rho - site_reduced(dense.amps, 0, 2)).max() < 1e-12


def test_reduced_state_needs_two_modes():
    with pytest.raises(DomainError):
        reduced_state(superposition(branch_pair_from_overlap(0.2), 3))


def test_entropy_values():
    assert abs(von_neumann_entropy(DensityMatrix2(np.diag([0.5, 0.5]).astype(complex))) - math.log(2)) < 1e-15
    assert von_neumann_entropy(DensityMatrix2(np.diag([1.0, 0.0]).astype(complex))) == 0.0
    rho = DensityMatrix2(np.diag([0.9, 0.1]).astype(complex))
    assert abs(von_neumann_entropy(rho) - 0.3250829733914482) < 1e-12


def test_entropy_rejects_real_negativity():
    rho = DensityMatrix2(np.diag([0.5, 0.5]).astype(complex))
    bad = DensityMatrix2.__new__(DensityMatrix2)
    object.__setattr__(bad, "matrix", np.diag([1.0 + 1e-9, -1e-9]).astype(complex))
    with pytest.raises(InvalidStateError):
        von_neumann_entropy(bad)
    # mild numerical negativity is clipped
    mild = DensityMatrix2.__new__(DensityMatrix2)
    object.__setattr__(mild, "matrix", np.diag([1.0 + 1e-11, -1e-11]).astype(complex))
    assert von_neumann_entropy(mild) >= 0.0
    assert von_neumann_entropy(rho) > 0.0


def test_entropy_sweep_endpoints_and_monotonicity():
    zs = np.linspace(0.0, 0.99, 150)
    rows = entropy_sweep(zs)
    assert abs(rows[0][1] - math.log(2)) < 1e-12
    assert abs(rows[0][2]) < 1e-12
    s_psi = [row[1] for row in rows]
    assert all(a > b for a, b in zip(s_psi, s_psi[1:]))
    for _, a, b in rows:
        for s in (a, b):
            assert -1e-12 <= s <= math.log(2) + 1e-12


def test_entropy_against_determinant_route():
    for z in Z_GRID:
        pair = branch_pair_from_overlap(z)
        psi = superposition(pair, 2)
        omega_plus, _ = collapsed_outcomes(pair, 2)
        for state in (psi, omega_plus):
            direct = von_neumann_entropy(reduced_state(state))
            assert abs(direct - _det_entropy(state.c0, state.c1, z)) < 1e-12


def test_entropy_basis_independence():
    for z in (0.0, 0.3, 0.6, 0.9):
        theta = math.acos(z)
        frame = von_neumann_entropy(
            reduced_state(superposition(branch_pair_from_overlap(z), 2))
        )
        dense = site_entropy(dense_superposition(theta, 2, "superposition").amps, 0, 2)
        assert abs(frame - dense) < 1e-10


def test_entropy_ordering_flips_across_crossing():
    rows = dict((z, (s_psi, s_om)) for z, s_psi, s_om in entropy_sweep([0.3, 0.9]))
    assert rows[0.3][1] < rows[0.3][0]
    assert rows[0.9][1] > rows[0.9][0]


def test_entropy_crossing_location():
    # Exact crossing: the reduced spectra coincide when the two-mode
    # branch overlap z^2 equals 1/2, so z* = 2**-0.5.
    z_star = entropy_crossing(tol=1e-6)
    assert abs(z_star - 2 ** -0.5) < 1e-5


def test_entropy_crossing_requires_sign_change():
    with pytest.raises(NoCrossingError):
        entropy_crossing(tol=1e-4, lo=0.05, hi=0.2)
    with pytest.raises(DomainError):
        entropy_crossing(tol=0.0)
