"""Exact algebra of equal-weight two-branch superpositions.

A single mode carries two branch vectors: |phi> and its rotated image
U|phi>, with real overlap z = <phi|U|phi> in [0, 1).  Everything in this
module is coordinatized in the orthonormal frame

    e0 = |phi>,   e1 = (U|phi> - z|phi>) / sqrt(1 - z^2),

so |phi> = (1, 0) and U|phi> = (z, sqrt(1 - z^2)).  N-mode product
branches |phi>^N and (U|phi>)^N only ever enter through their Gram
matrix (mutual overlap z^N), which reduces any state in their span to
two complex coefficients regardless of N or of the physical carrier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IncompatibleStateError, SingularOverlapError

# Beyond this overlap the frame vector e1 and every 1/sqrt(1 - z^2)
# downstream lose all precision; identical branches are rejected.
SINGULAR_Z = 1.0 - 1e-8

_NORM_TOL = 1e-12


def _as_real(x, name: str) -> float:
    if isinstance(x, complex) or np.iscomplexobj(x):
        raise DomainError(f"{name} must be real, got {x!r}")
    return float(x)


def overlap_power(z: float, n: int) -> float:
    """z**n, evaluated in log space for large n.

    Underflow to exactly 0 is accepted: far-apart branches are treated
    as orthogonal rather than misclassified.
    """
    if z == 0.0:
        return 1.0 if n == 0 else 0.0
    if n > 64:
        return math.exp(n * math.log(z))
    return z ** n


@dataclass(frozen=True)
class BranchPair:
    """Single-mode branch geometry in the effective frame.

    ``basis_phi`` and ``basis_uphi`` are the frame coordinates of |phi>
    and U|phi>.  ``theta`` records the qubit rotation angle when the
    pair comes from the spin construction (then z = cos theta).
    """

    z: float
    basis_phi: np.ndarray
    basis_uphi: np.ndarray
    theta: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.z < 1.0:
            raise DomainError(f"branch overlap must lie in [0, 1), got {self.z}")
        if self.z > SINGULAR_Z:
            raise SingularOverlapError(
                f"branch overlap {self.z} exceeds {SINGULAR_Z}: branches indistinguishable"
            )
        norm = math.hypot(*self.basis_uphi)
        if abs(norm - 1.0) > _NORM_TOL:
            raise DomainError(f"U|phi> coordinates must be unit norm, got {norm}")
        if self.theta is not None and abs(self.z - math.cos(self.theta)) > _NORM_TOL:
            raise DomainError("stored angle inconsistent with overlap: z != cos(theta)")


def branch_pair_from_overlap(z) -> BranchPair:
    """Branch pair with the given real overlap z in [0, 1)."""
    z = _as_real(z, "overlap z")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"branch overlap must lie in [0, 1), got {z}")
    if z > SINGULAR_Z:
        raise SingularOverlapError(
            f"branch overlap {z} exceeds {SINGULAR_Z}: branches indistinguishable"
        )
    return BranchPair(
        z=z,
        basis_phi=np.array([1.0, 0.0]),
        basis_uphi=np.array([z, math.sqrt(1.0 - z * z)]),
    )


def qubit_branch_pair(theta) -> BranchPair:
    """Branch pair of the spin realization |phi> = |0>, U a rotation by theta.

    Requires 0 < theta <= pi/2; theta = 0 would make the branches
    identical (z = 1).
    """
    theta = _as_real(theta, "theta")
    if not 0.0 < theta <= math.pi / 2:
        raise DomainError(f"theta must lie in (0, pi/2], got {theta}")
    z = math.cos(theta)
    if z > SINGULAR_Z:
        raise SingularOverlapError(f"theta={theta} gives overlap {z} too close to 1")
    return BranchPair(
        z=z,
        basis_phi=np.array([1.0, 0.0]),
        basis_uphi=np.array([z, math.sqrt(1.0 - z * z)]),
        theta=theta,
    )


@dataclass(frozen=True)
class TwoBranchState:
    """State c0 |phi>^N + c1 (U|phi>)^N on N modes with per-mode overlap z."""

    c0: complex
    c1: complex
    n_modes: int
    z: float

    def __post_init__(self):
        if not isinstance(self.n_modes, int) or self.n_modes < 1:
            raise DomainError(f"mode count must be a positive integer, got {self.n_modes}")
        if not 0.0 <= self.z < 1.0:
            raise DomainError(f"branch overlap must lie in [0, 1), got {self.z}")
        zn = overlap_power(self.z, self.n_modes)
        norm_sq = (
            abs(self.c0) ** 2
            + abs(self.c1) ** 2
            + 2.0 * (self.c0.conjugate() * self.c1 * zn).real
        )
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise DomainError(f"state not normalized: |norm^2 - 1| = {abs(norm_sq - 1.0):.3e}")

    @property
    def branch_overlap(self) -> float:
        """Overlap z^N between the two N-mode branches."""
        return overlap_power(self.z, self.n_modes)


def superposition(pair: BranchPair, n_modes: int) -> TwoBranchState:
    """Equal-weight superposition of the two N-mode branches.

    Both coefficients equal (2 + 2 z^N)^(-1/2), which normalizes the sum
    of two unit branches with mutual overlap z^N.
    """
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    zn = overlap_power(pair.z, n_modes)
    c = 1.0 / math.sqrt(2.0 + 2.0 * zn)
    return TwoBranchState(c0=complex(c), c1=complex(c), n_modes=n_modes, z=pair.z)


def two_branch_inner(a: TwoBranchState, b: TwoBranchState) -> complex:
    """Inner product <a|b> through the branch Gram matrix.

    Requires both states to share the same mode count and overlap.
    """
    if a.n_modes != b.n_modes or a.z != b.z:
        raise IncompatibleStateError(
            f"states live on different branch geometries: "
            f"(N={a.n_modes}, z={a.z}) vs (N={b.n_modes}, z={b.z})"
        )
    zn = overlap_power(a.z, a.n_modes)
    # Grouped so that swapping the arguments conjugates the result exactly.
    direct = a.c0.conjugate() * b.c0 + a.c1.conjugate() * b.c1
    cross = a.c0.conjugate() * b.c1 + a.c1.conjugate() * b.c0
    return direct + cross * zn
