"""Phase-estimation precision of spin superpositions and their collapsed states.

All states handled here are permutation symmetric, so instead of 2^N
amplitudes they are stored as N+1 amplitudes over the collective-spin
ladder |J = N/2, m>, m = J .. -J (index k holds m = J - k).  The probe
generator is the 1-local field

    T(vartheta) = cos(vartheta) J_x + sin(vartheta) J_z,

whose standard deviation in a probe state sets the best achievable
phase resolution through delta_phi = 1 / (2 Delta sqrt(nu)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._search import maximize_scalar
from .collapse import cm_single, collapsed_outcomes
from .effective_states import _as_real, overlap_power, qubit_branch_pair
from .errors import DomainError

_STATE_KINDS = ("superposition", "omega_plus", "omega_minus", "branch0", "branch1")


@dataclass(frozen=True)
class DickeVector:
    """Unit vector in the N+1 dimensional symmetric subspace."""

    n_modes: int
    amps: np.ndarray

    def __post_init__(self):
        if not isinstance(self.n_modes, int) or self.n_modes < 1:
            raise DomainError(f"mode count must be a positive integer, got {self.n_modes}")
        if self.amps.shape != (self.n_modes + 1,):
            raise DomainError(
                f"expected {self.n_modes + 1} amplitudes, got shape {self.amps.shape}"
            )
        norm = np.linalg.norm(self.amps)
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"amplitudes not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")


@dataclass(frozen=True)
class DickeOperator:
    """Hermitian operator on the symmetric subspace."""

    n_modes: int
    matrix: np.ndarray

    def __post_init__(self):
        d = self.n_modes + 1
        if self.matrix.shape != (d, d):
            raise DomainError(f"expected {d}x{d} matrix, got {self.matrix.shape}")
        if np.abs(self.matrix - self.matrix.conj().T).max() > 1e-12:
            raise DomainError("operator is not Hermitian")


def collective_matrices(n_modes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Collective spin matrices (J_x, J_y, J_z) in the ladder basis."""
    j = n_modes / 2.0
    m = j - np.arange(n_modes + 1)
    jz = np.diag(m).astype(complex)
    # raising: J+ |j, m> = sqrt(j(j+1) - m(m+1)) |j, m+1>, index m+1 -> k-1
    off = np.sqrt(j * (j + 1.0) - m[1:] * (m[1:] + 1.0))
    jp = np.zeros((n_modes + 1, n_modes + 1))
    jp[np.arange(n_modes), np.arange(1, n_modes + 1)] = off
    jx = ((jp + jp.T) / 2.0).astype(complex)
    jy = (jp - jp.T) / 2j
    return jx, jy, jz


def spin_coherent_amplitudes(theta: float, n_modes: int) -> np.ndarray:
    """Amplitudes of the product state (cos(theta)|0> + sin(theta)|1>)^N.

    The component with k flipped spins carries binomial weight
    sqrt(C(N, k)) cos^(N-k) sin^k, evaluated in log space so large N
    stays accurate.
    """
    c, s = math.cos(theta), math.sin(theta)
    amps = np.zeros(n_modes + 1)
    for k in range(n_modes + 1):
        if (c == 0.0 and n_modes - k > 0) or (s == 0.0 and k > 0):
            continue
        ln = 0.5 * (
            math.lgamma(n_modes + 1) - math.lgamma(k + 1) - math.lgamma(n_modes - k + 1)
        )
        if n_modes - k > 0:
            ln += (n_modes - k) * math.log(c)
        if k > 0:
            ln += k * math.log(s)
        amps[k] = math.exp(ln)
    return amps


def dicke_embed(theta, n_modes: int, which: str) -> DickeVector:
    """Symmetric-subspace amplitudes of the spin states of interest.

    ``which`` selects among: ``branch0`` (all spins up), ``branch1``
    (the rotated product state), ``superposition`` (their equal-weight
    sum), ``omega_plus`` / ``omega_minus`` (the collapsed outcomes).
    """
    if which not in _STATE_KINDS:
        raise DomainError(f"unknown state selector {which!r}, expected one of {_STATE_KINDS}")
    pair = qubit_branch_pair(theta)
    b0 = np.zeros(n_modes + 1, dtype=complex)
    b0[0] = 1.0
    if which == "branch0":
        return DickeVector(n_modes, b0)
    b1 = spin_coherent_amplitudes(pair.theta, n_modes).astype(complex)
    if which == "branch1":
        return DickeVector(n_modes, b1)
    if which == "superposition":
        zn = overlap_power(pair.z, n_modes)
        amps = (b0 + b1) / math.sqrt(2.0 + 2.0 * zn)
    else:
        omega_plus, omega_minus = collapsed_outcomes(pair, n_modes)
        state = omega_plus if which == "omega_plus" else omega_minus
        amps = state.c0 * b0 + state.c1 * b1
    # Combining nearly parallel branches cancels; scrub the norm dust.
    return DickeVector(n_modes, amps / np.linalg.norm(amps))


def collective_generator(vartheta, n_modes: int) -> DickeOperator:
    """The probe generator cos(vartheta) J_x + sin(vartheta) J_z."""
    vartheta = _as_real(vartheta, "vartheta")
    jx, _, jz = collective_matrices(n_modes)
    return DickeOperator(n_modes, math.cos(vartheta) * jx + math.sin(vartheta) * jz)


def collective_from_single(h: np.ndarray, n_modes: int) -> np.ndarray:
    """Symmetric-subspace matrix of sum_i h^(i) for a single-qubit Hermitian h.

    Decomposes h over the Pauli basis; the identity part contributes
    N * coeff and each Pauli contributes twice the matching collective
    spin matrix.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (2, 2) or np.abs(h - h.conj().T).max() > 1e-12:
        raise DomainError("expected a 2x2 Hermitian matrix")
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    alpha = np.trace(h).real / 2.0
    beta = np.trace(h @ sx).real / 2.0
    gamma = np.trace(h @ sy).real / 2.0
    delta = np.trace(h @ sz).real / 2.0
    jx, jy, jz = collective_matrices(n_modes)
    return (
        alpha * n_modes * np.eye(n_modes + 1, dtype=complex)
        + 2.0 * beta * jx
        + 2.0 * gamma * jy
        + 2.0 * delta * jz
    )


def _moments(state: DickeVector, matrix: np.ndarray) -> tuple[float, float]:
    tv = matrix @ state.amps
    m1 = np.vdot(state.amps, tv).real
    m2 = np.vdot(tv, tv).real
    return m1, m2


def deviation(state: DickeVector, vartheta) -> float:
    """Standard deviation of T(vartheta) in the given state."""
    op = collective_generator(vartheta, state.n_modes)
    m1, m2 = _moments(state, op.matrix)
    return math.sqrt(max(m2 - m1 * m1, 0.0))


def max_deviation(state: DickeVector) -> tuple[float, float]:
    """(vartheta*, Delta*) maximizing the deviation over vartheta in [-pi, pi).

    A 721-point scan locates the basin (the objective is a smooth
    pi-periodic trigonometric curve, so no maximum can hide between
    grid points); golden-section search then refines vartheta* to 1e-8.
    Plateau ties resolve toward the smallest |vartheta|.
    """
    return maximize_scalar(
        lambda vt: deviation(state, vt), -math.pi, math.pi, coarse=721, xtol=1e-8
    )


def qcrb(delta: float, nu: int = 1) -> float:
    """Best phase resolution 1 / (2 Delta sqrt(nu)) from a deviation Delta.

    ``nu`` counts independent repetitions of the experiment.
    """
    delta = _as_real(delta, "delta")
    if delta <= 0.0:
        raise DomainError(f"deviation must be positive, got {delta}")
    if not isinstance(nu, int) or nu < 1:
        raise DomainError(f"repetition count must be a positive integer, got {nu}")
    return 1.0 / (2.0 * delta * math.sqrt(nu))


def scaling_exponent(which: str, theta: float, n_values: Sequence[int]) -> float:
    """Log-log slope of the maximal deviation against the mode count.

    Slope 1 means Heisenberg scaling of the achievable precision, slope
    1/2 the standard quantum limit.  Needs at least four mode counts,
    all of them at least 4.
    """
    ns = list(n_values)
    if len(ns) < 4:
        raise DomainError("need at least four mode counts for a scaling fit")
    if any((not isinstance(n, int)) or n < 4 for n in ns):
        raise DomainError("all mode counts must be integers >= 4")
    deltas = []
    for n in ns:
        _, d = max_deviation(dicke_embed(theta, n, which))
        deltas.append(d)
    if min(deltas) <= 0.0:
        raise DomainError("degenerate fit: vanishing deviation in the family")
    logn = np.log(np.asarray(ns, dtype=float))
    logd = np.log(np.asarray(deltas))
    if np.ptp(logn) == 0.0:
        raise DomainError("degenerate fit: mode counts must not all coincide")
    slope, _ = np.polyfit(logn, logd, 1)
    return float(slope)


def cm_generator_check(theta, n_modes: int) -> float:
    """Max-abs residual of T(-theta) + (1/2) sum_i (E_- - E_+)^(i).

    E_+/- are the single-mode collapsing-measurement projectors for the
    spin pair at angle theta; per mode E_- - E_+ equals
    sin(theta) sigma_z - cos(theta) sigma_x, which is -2x the per-mode
    term of T(-theta), so the sum cancels identically.  The residual is
    evaluated numerically from the constructed projectors.
    """
    pair = qubit_branch_pair(theta)
    cm = cm_single(pair.z)
    # The spin realization's frame coincides with the computational basis.
    e_diff = np.outer(cm.xi_minus, cm.xi_minus) - np.outer(cm.xi_plus, cm.xi_plus)
    collective = collective_from_single(e_diff, n_modes)
    t_gen = collective_generator(-pair.theta, n_modes).matrix
    return float(np.abs(t_gen + 0.5 * collective).max())


def dicke_moments(state: DickeVector, vartheta: float) -> tuple[float, float]:
    """(<T>, <T^2>) of the probe generator, exposed for cross-checking."""
    op = collective_generator(vartheta, state.n_modes)
    return _moments(state, op.matrix)
