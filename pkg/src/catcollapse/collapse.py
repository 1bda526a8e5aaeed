"""Collapsing measurements and their outcome states.

A collapsing measurement for an equal-weight two-branch superposition is
the projective measurement whose two outcomes are orthogonal, occur with
probability 1/2 each on the superposition, and lie as close as possible
to the branches.  It coincides with the minimum-error (Helstrom)
measurement discriminating the branches: its projectors are the
spectral projections of |phi><phi| - U|phi><phi|U^dag.

For N modes the same construction applies verbatim with the branch
overlap z replaced by z^N.  The m-branch generalization is realized by
the square-root measurement and verified against the three defining
conditions (orthonormality, outcome probability 1/m, permutation
covariance); when a condition fails the residuals are reported instead
of a measurement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .effective_states import (
    SINGULAR_Z,
    BranchPair,
    TwoBranchState,
    _as_real,
    overlap_power,
)
from .errors import DomainError, LinearDependenceError, SingularOverlapError

_TOL = 1e-12


@dataclass(frozen=True)
class CMPair:
    """The two collapsing-measurement vectors in the effective frame.

    ``xi_minus`` is the outcome closest to |phi>, ``xi_plus`` the one
    closest to U|phi>; the global phase makes the |phi> component of
    xi_minus real positive.
    """

    z: float
    xi_plus: np.ndarray
    xi_minus: np.ndarray

    def __post_init__(self):
        for name, v in (("xi_plus", self.xi_plus), ("xi_minus", self.xi_minus)):
            if abs(np.linalg.norm(v) - 1.0) > _TOL:
                raise DomainError(f"{name} is not unit norm")
        if abs(np.vdot(self.xi_plus, self.xi_minus)) > _TOL:
            raise DomainError("measurement vectors are not orthogonal")
        # Probability 1/2 on the single-mode equal superposition.
        psi = np.array([1.0 + self.z, math.sqrt(1.0 - self.z**2)])
        psi /= math.sqrt(2.0 + 2.0 * self.z)
        for v in (self.xi_plus, self.xi_minus):
            if abs(abs(np.vdot(v, psi)) ** 2 - 0.5) > _TOL:
                raise DomainError("outcome probability on the superposition is not 1/2")


def cm_single(z) -> CMPair:
    """Collapsing measurement for a single mode with branch overlap z.

    In frame coordinates, with a = sqrt(1-z) and b = sqrt(1+z):

        xi_minus = ((a+b)/2, (a-b)/2),   xi_plus = ((b-a)/2, (a+b)/2).

    Equivalently the branch coefficients of xi_-/+ on (|phi>, U|phi>)
    are (sqrt(1-z) +/- sqrt(1+z)) / (2 sqrt(1-z^2)) and its mirror.
    """
    z = _as_real(z, "overlap z")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"branch overlap must lie in [0, 1), got {z}")
    if z > SINGULAR_Z:
        raise SingularOverlapError(
            f"overlap {z} exceeds {SINGULAR_Z}: measurement construction is singular"
        )
    a = math.sqrt(1.0 - z)
    b = math.sqrt(1.0 + z)
    xi_minus = np.array([(a + b) / 2.0, (a - b) / 2.0])
    xi_plus = np.array([(b - a) / 2.0, (a + b) / 2.0])
    return CMPair(z=z, xi_plus=xi_plus, xi_minus=xi_minus)


def branch_coefficients(vec: np.ndarray, z: float) -> tuple[float, float]:
    """Coefficients of a frame vector on the nonorthogonal pair (|phi>, U|phi>)."""
    s = math.sqrt(1.0 - z * z)
    c_uphi = vec[1] / s
    c_phi = vec[0] - z * c_uphi
    return float(c_phi), float(c_uphi)


def helstrom_success_probability(z) -> float:
    """Best success probability for discriminating the two branches,
    (1 + sqrt(1 - z^2)) / 2, attained by the collapsing measurement."""
    z = _as_real(z, "overlap z")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"branch overlap must lie in [0, 1), got {z}")
    return 0.5 * (1.0 + math.sqrt(1.0 - z * z))


def collapsed_outcomes(pair: BranchPair, n_modes: int) -> tuple[TwoBranchState, TwoBranchState]:
    """The two post-measurement states of the N-mode collapsing measurement.

    Returns (omega_plus, omega_minus).  These are the single-mode
    measurement vectors with z replaced by the N-mode branch overlap
    z^N: omega_-/+ has branch coefficients
    (sqrt(1-z^N) +/- sqrt(1+z^N)) / (2 sqrt(1-z^{2N})) on |phi>^N and
    the mirrored pair on (U|phi>)^N.
    """
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    zn = overlap_power(pair.z, n_modes)
    if zn >= 1.0 - 1e-12:
        raise SingularOverlapError(f"N-mode branch overlap {zn} is degenerate")
    a = math.sqrt(1.0 - zn)
    b = math.sqrt(1.0 + zn)
    d = 2.0 * math.sqrt(1.0 - zn * zn)
    omega_plus = TwoBranchState(
        c0=complex((a - b) / d), c1=complex((a + b) / d), n_modes=n_modes, z=pair.z
    )
    omega_minus = TwoBranchState(
        c0=complex((a + b) / d), c1=complex((a - b) / d), n_modes=n_modes, z=pair.z
    )
    return omega_plus, omega_minus


@dataclass(frozen=True)
class CMConditionReport:
    """Worst-case residuals of the three m-branch measurement conditions."""

    m: int
    orthonormality: float
    state_probability: float
    permutation_covariance: float
    tolerance: float

    @property
    def satisfied(self) -> bool:
        return (
            self.orthonormality <= self.tolerance
            and self.state_probability <= self.tolerance
            and self.permutation_covariance <= self.tolerance
        )


@dataclass(frozen=True)
class MeasurementSet:
    """Orthonormal measurement vectors for an m-branch superposition.

    ``xi`` holds the measurement vectors as columns in the orthonormal
    span basis; ``state_overlaps[k, j]`` is <phi_k|xi_j>.
    """

    m: int
    xi: np.ndarray
    gram: np.ndarray
    state_overlaps: np.ndarray
    conditions: CMConditionReport


def mary_cm(gram, tol: float = 1e-8) -> MeasurementSet | CMConditionReport:
    """Square-root measurement for m linearly independent equal-weight branches.

    The input is the real positive-definite Gram matrix of the branch
    states.  The measurement vectors are xi_j = sum_k (G^{-1/2})_{kj}
    |phi_k> expressed in span coordinates, which makes <phi_k|xi_j> =
    (G^{1/2})_{kj}.  All three defining conditions are then checked
    numerically; if any residual exceeds ``tol`` the report is returned
    instead of a measurement set.  For permutation-symmetric Gram
    matrices the conditions hold exactly.
    """
    try:
        g = np.asarray(gram, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"Gram matrix must be real: {exc}") from exc
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise DomainError(f"Gram matrix must be square, got shape {g.shape}")
    m = g.shape[0]
    if m < 2:
        raise DomainError("need at least two branches")
    if np.abs(g - g.T).max() > 1e-12:
        raise DomainError("Gram matrix must be symmetric")
    lam, vecs = np.linalg.eigh(g)
    if lam[0] <= 1e-12 * max(lam[-1], 1.0):
        raise LinearDependenceError(
            f"Gram matrix is singular (smallest eigenvalue {lam[0]:.3e}): "
            "branches are linearly dependent"
        )
    g_half = (vecs * np.sqrt(lam)) @ vecs.T
    g_inv_half = (vecs / np.sqrt(lam)) @ vecs.T
    phi = g_half              # columns: branch states in span coordinates
    xi = phi @ g_inv_half     # columns: measurement vectors

    ortho = float(np.abs(xi.conj().T @ xi - np.eye(m)).max())
    psi = phi.sum(axis=1)
    psi = psi / np.linalg.norm(psi)
    prob = float(np.abs(np.abs(xi.conj().T @ psi) ** 2 - 1.0 / m).max())
    overlaps = phi.conj().T @ xi
    perm = 0.0
    for i, j in itertools.combinations(range(m), 2):
        order = list(range(m))
        order[i], order[j] = order[j], order[i]
        perm = max(perm, float(np.abs(overlaps - overlaps[np.ix_(order, order)]).max()))

    report = CMConditionReport(
        m=m,
        orthonormality=ortho,
        state_probability=prob,
        permutation_covariance=perm,
        tolerance=tol,
    )
    if not report.satisfied:
        return report
    return MeasurementSet(m=m, xi=xi, gram=g, state_overlaps=overlaps, conditions=report)
