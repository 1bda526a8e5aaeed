"""Entanglement entropy of two-mode superpositions and collapsed outcomes.

For two modes a state c0 |phi phi> + c1 |uphi uphi> has the single-mode
reduced density matrix V V^dag where V is the 2x2 coefficient matrix in
the per-mode frame.  Entropies are in nats (natural logarithm,
Boltzmann constant set to 1); divide by ln 2 for bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .collapse import collapsed_outcomes
from .effective_states import TwoBranchState, branch_pair_from_overlap, superposition
from .errors import DomainError, InvalidStateError, NoCrossingError

_NEGATIVE_EIGENVALUE_FLOOR = -1e-10


@dataclass(frozen=True)
class DensityMatrix2:
    """Single-mode reduced state in the effective frame."""

    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.shape != (2, 2):
            raise InvalidStateError(f"expected a 2x2 matrix, got {m.shape}")
        if np.abs(m - m.conj().T).max() > 1e-12:
            raise InvalidStateError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > 1e-12:
            raise InvalidStateError("density matrix trace is not 1")
        lam = np.linalg.eigvalsh(m).real
        if lam.min() < -1e-12 or lam.max() > 1.0 + 1e-12:
            raise InvalidStateError(f"eigenvalues outside [0, 1]: {lam}")


def reduced_state(state: TwoBranchState) -> DensityMatrix2:
    """Partial trace over the second mode of a two-mode branch state."""
    if state.n_modes != 2:
        raise DomainError(
            f"single-mode reduction is defined here for exactly 2 modes, got {state.n_modes}"
        )
    s = math.sqrt(1.0 - state.z**2)
    uphi = np.array([state.z, s], dtype=complex)
    coeff = state.c0 * np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    coeff = coeff + state.c1 * np.outer(uphi, uphi)
    return DensityMatrix2(coeff @ coeff.conj().T)


def von_neumann_entropy(rho: DensityMatrix2) -> float:
    """-sum(lambda ln lambda) with 0 ln 0 = 0, in nats."""
    lam = np.linalg.eigvalsh(rho.matrix).real
    if lam.min() < _NEGATIVE_EIGENVALUE_FLOOR:
        raise InvalidStateError(f"eigenvalue {lam.min()} below tolerance")
    lam = np.clip(lam, 0.0, 1.0)
    lam = lam[lam > 0.0]
    return float(-(lam * np.log(lam)).sum())


def _entropies_at(z: float) -> tuple[float, float]:
    pair = branch_pair_from_overlap(z)
    psi = superposition(pair, 2)
    omega_plus, _ = collapsed_outcomes(pair, 2)
    return (
        von_neumann_entropy(reduced_state(psi)),
        von_neumann_entropy(reduced_state(omega_plus)),
    )


def entropy_sweep(z_grid) -> list[tuple[float, float, float]]:
    """Rows (z, S_superposition, S_collapsed_plus) over the given overlaps."""
    rows = []
    for z in z_grid:
        s_psi, s_omega = _entropies_at(float(z))
        rows.append((float(z), s_psi, s_omega))
    return rows


def entropy_crossing(tol: float = 1e-6, lo: float = 0.3, hi: float = 0.95) -> float:
    """Overlap at which the collapsed state's entropy overtakes the
    superposition's, located by bisection on [lo, hi] to width tol."""
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    def gap(z: float) -> float:
        s_psi, s_omega = _entropies_at(z)
        return s_omega - s_psi

    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise NoCrossingError(
            f"no entropy crossing in [{lo}, {hi}]: gap has the same sign at both ends"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid > 0.0) == (g_hi > 0.0):
            hi, g_hi = mid, g_mid
        else:
            lo, g_lo = mid, g_mid
    return 0.5 * (lo + hi)
