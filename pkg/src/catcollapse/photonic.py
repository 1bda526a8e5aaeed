"""Truncated-Fock bosonic states: coherent branches, parity cats, and the
displacement metrology surviving a collapse of their N-fold products.

Conventions fixed here (stated because several are common in the
literature): the quadrature at angle lam is
x_lam = (a e^{-i lam} + a^dag e^{+i lam}) / 2, giving the vacuum a
variance of 1/4; the displacement-estimation quantum Fisher information
of a pure state probed along x_lam is 4 Var(x_lam).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ._search import maximize_scalar
from .errors import CutoffError, DomainError

_LEAKAGE_TOL = 1e-12


@dataclass(frozen=True)
class FockVector:
    """Unit vector over photon numbers 0 .. cutoff.

    ``alpha_tag`` records the coherent amplitude the state was built
    from, when there is one.
    """

    cutoff: int
    amps: np.ndarray
    alpha_tag: complex | None = None

    def __post_init__(self):
        if not isinstance(self.cutoff, int) or self.cutoff < 0:
            raise DomainError(f"cutoff must be a nonnegative integer, got {self.cutoff}")
        if self.amps.shape != (self.cutoff + 1,):
            raise DomainError(f"expected {self.cutoff + 1} amplitudes")
        norm = np.linalg.norm(self.amps)
        if abs(norm - 1.0) > 1e-10:
            raise DomainError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")


def _require_adequate_cutoff(alpha: complex, cutoff: int):
    if not isinstance(cutoff, int):
        raise DomainError(f"cutoff must be an integer, got {cutoff!r}")
    needed = 4.0 * abs(alpha) ** 2 + 25.0
    if cutoff < needed:
        raise CutoffError(
            f"cutoff {cutoff} too small for |alpha| = {abs(alpha):.3f}; need >= {math.ceil(needed)}"
        )


def _coherent_amplitudes(alpha: complex, cutoff: int) -> np.ndarray:
    """Raw amplitudes exp(-|a|^2/2) a^n / sqrt(n!), in log space."""
    if alpha == 0:
        amps = np.zeros(cutoff + 1, dtype=complex)
        amps[0] = 1.0
        return amps
    mag = abs(alpha)
    phase = cmath.phase(complex(alpha))
    n = np.arange(cutoff + 1)
    log_fact = np.array([math.lgamma(k + 1) for k in range(cutoff + 1)])
    log_mag = -0.5 * mag**2 + n * math.log(mag) - 0.5 * log_fact
    return np.exp(log_mag) * np.exp(1j * phase * n)


def coherent_vector(alpha, cutoff: int) -> FockVector:
    """Coherent state |alpha> truncated at the given photon number.

    The cutoff must satisfy the adequacy heuristic 4|alpha|^2 + 25 and
    leave at most 1e-12 of the exact state's weight beyond it; the
    retained amplitudes are renormalized.
    """
    alpha = complex(alpha)
    _require_adequate_cutoff(alpha, cutoff)
    raw = _coherent_amplitudes(alpha, cutoff)
    weight = float(np.abs(raw) ** 2 @ np.ones(cutoff + 1))
    leakage = 1.0 - weight
    if leakage > _LEAKAGE_TOL:
        raise CutoffError(f"truncation leakage {leakage:.3e} exceeds {_LEAKAGE_TOL}")
    return FockVector(cutoff=cutoff, amps=raw / math.sqrt(weight), alpha_tag=alpha)


def cat_vector(alpha, parity: int, cutoff: int) -> FockVector:
    """Even (+1) or odd (-1) superposition of |alpha> and |-alpha>.

    Built directly in the surviving parity sector, so amplitudes on the
    opposite parity vanish identically; the normalization approaches
    sqrt(2 +/- 2 exp(-2 alpha^2)) as the cutoff grows.
    """
    if parity not in (+1, -1):
        raise DomainError(f"parity must be +1 or -1, got {parity!r}")
    if isinstance(alpha, complex) or np.iscomplexobj(alpha):
        raise DomainError("cat amplitude must be real and positive")
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError(f"cat amplitude must be positive, got {alpha}")
    _require_adequate_cutoff(alpha, cutoff)
    raw = _coherent_amplitudes(alpha, cutoff).real.astype(float)
    leakage = 1.0 - float(raw @ raw)
    if leakage > _LEAKAGE_TOL:
        raise CutoffError(f"truncation leakage {leakage:.3e} exceeds {_LEAKAGE_TOL}")
    keep = (np.arange(cutoff + 1) % 2 == 0) if parity == +1 else (np.arange(cutoff + 1) % 2 == 1)
    amps = np.where(keep, raw, 0.0)
    amps = amps / np.linalg.norm(amps)
    return FockVector(cutoff=cutoff, amps=amps.astype(complex), alpha_tag=complex(alpha))


def fock_inner(a: FockVector, b: FockVector) -> complex:
    if a.cutoff != b.cutoff:
        raise DomainError("states have different cutoffs")
    return complex(np.vdot(a.amps, b.amps))


def ladder_matrix(cutoff: int) -> np.ndarray:
    """Annihilation operator on the truncated space."""
    return np.diag(np.sqrt(np.arange(1.0, cutoff + 1)), 1).astype(complex)


def number_moments(state: FockVector) -> tuple[float, float]:
    """(<n>, <n^2>) by direct amplitude sums."""
    p = np.abs(state.amps) ** 2
    n = np.arange(state.cutoff + 1)
    return float(p @ n), float(p @ n**2)


def mandel_q(state: FockVector) -> float:
    """Photon-number statistics parameter (Var(n) - <n>) / <n>.

    -1 for number states, 0 for coherent (Poissonian) light; undefined
    on the vacuum.
    """
    mean_n, mean_n2 = number_moments(state)
    if mean_n < 1e-15:
        raise DomainError("Mandel Q is undefined for the vacuum")
    return (mean_n2 - mean_n**2 - mean_n) / mean_n


def quadrature_variance(state: FockVector, angle) -> float:
    """Variance of x_angle = (a e^{-i angle} + a^dag e^{+i angle}) / 2."""
    mean_n, _ = number_moments(state)
    if state.cutoff - mean_n < 3.0:
        raise CutoffError(
            f"mean photon number {mean_n:.2f} too close to cutoff {state.cutoff}"
        )
    a = ladder_matrix(state.cutoff)
    x = 0.5 * (a * cmath.exp(-1j * float(angle)) + a.conj().T * cmath.exp(1j * float(angle)))
    xv = x @ state.amps
    mean = np.vdot(state.amps, xv).real
    second = np.vdot(xv, xv).real
    return float(max(second - mean * mean, 0.0))


def best_quadrature_angle(state: FockVector) -> tuple[float, float]:
    """(angle*, variance*) maximizing the quadrature variance over [0, pi).

    Quadratures at angle and angle + pi differ only by sign, so half a
    turn covers all of them.
    """
    return maximize_scalar(
        lambda lam: quadrature_variance(state, lam), 0.0, math.pi, coarse=361, xtol=1e-10
    )


@dataclass(frozen=True)
class CollapsedOutcomeReport:
    """Displacement-metrology figures of one product-cat outcome."""

    parity: int
    best_angle: float
    quadrature_variance: float
    per_mode_qfi: float
    total_qfi: float
    qcrb: float
    mandel_q: float
    mean_photons: float


@dataclass(frozen=True)
class HcsCollapseReport:
    """Collapse analysis of the N-fold product of parity cat branches.

    The two branches are the N-fold even and odd cat products; their
    single-mode overlap vanishes exactly (opposite parity sectors), so
    the collapsing measurement reduces to branch projection and the two
    outcomes are the product cat states themselves.  Each outcome's
    displacement QFI adds over modes, giving a resolution falling off
    as 1/sqrt(N).
    """

    alpha: float
    n_modes: int
    cutoff: int
    branch_overlap: float
    outcome_plus: CollapsedOutcomeReport
    outcome_minus: CollapsedOutcomeReport


def _outcome_report(cat: FockVector, parity: int, n_modes: int) -> CollapsedOutcomeReport:
    angle, var = best_quadrature_angle(cat)
    per_mode = 4.0 * var
    total = n_modes * per_mode
    mean_n, _ = number_moments(cat)
    return CollapsedOutcomeReport(
        parity=parity,
        best_angle=angle,
        quadrature_variance=var,
        per_mode_qfi=per_mode,
        total_qfi=total,
        qcrb=1.0 / math.sqrt(total),
        mandel_q=mandel_q(cat),
        mean_photons=mean_n,
    )


def hcs_collapse_report(alpha, n_modes: int, cutoff: int) -> HcsCollapseReport:
    """Collapse and remnant-metrology report for hierarchical cat states.

    The plus outcome is the product of odd cats, the minus outcome the
    product of even cats (the outcome closest to the first branch).
    Multimode states are never materialized: the branches are mutually
    orthogonal products, so every reported quantity factorizes over
    modes.
    """
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    cat_even = cat_vector(alpha, +1, cutoff)
    cat_odd = cat_vector(alpha, -1, cutoff)
    overlap = abs(fock_inner(cat_even, cat_odd))
    return HcsCollapseReport(
        alpha=float(alpha),
        n_modes=n_modes,
        cutoff=cutoff,
        branch_overlap=overlap,
        outcome_plus=_outcome_report(cat_odd, -1, n_modes),
        outcome_minus=_outcome_report(cat_even, +1, n_modes),
    )
