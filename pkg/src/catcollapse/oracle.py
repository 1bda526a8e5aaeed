"""Dense brute-force reference implementation.

Everything here works on full 2^N statevectors in the computational
basis and is deliberately free of the closed forms used elsewhere, so
it can serve as an independent check of them.  Mode counts are capped
at desk scale: 12 for states, 10 for operator eigendecompositions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._search import maximize_scalar
from .collapse import cm_single, collapsed_outcomes
from .effective_states import overlap_power, qubit_branch_pair
from .errors import DomainError, SingularOverlapError, SizeLimitError

MAX_STATE_MODES = 12
MAX_OPERATOR_MODES = 10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]])
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_STATE_KINDS = ("superposition", "omega_plus", "omega_minus", "branch0", "branch1")


@dataclass(frozen=True)
class DenseState:
    """Full statevector over N qubits."""

    n_modes: int
    amps: np.ndarray

    def __post_init__(self):
        if not isinstance(self.n_modes, int) or self.n_modes < 1:
            raise DomainError(f"mode count must be a positive integer, got {self.n_modes}")
        if self.n_modes > MAX_STATE_MODES:
            raise SizeLimitError(
                f"dense states support at most {MAX_STATE_MODES} modes, got {self.n_modes}"
            )
        if self.amps.shape != (2**self.n_modes,):
            raise DomainError(f"expected {2**self.n_modes} amplitudes")
        norm = np.linalg.norm(self.amps)
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")


def qubit_rotation(theta: float) -> np.ndarray:
    """Real rotation taking |0> to cos(theta)|0> + sin(theta)|1>."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def product_state(single: np.ndarray, n_modes: int) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for _ in range(n_modes):
        out = np.kron(out, single)
    return out


def dense_superposition(theta, n_modes: int, which: str = "superposition") -> DenseState:
    """Spin states built literally as 2^N statevectors."""
    if which not in _STATE_KINDS:
        raise DomainError(f"unknown state selector {which!r}, expected one of {_STATE_KINDS}")
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    if n_modes > MAX_STATE_MODES:
        raise SizeLimitError(f"dense states support at most {MAX_STATE_MODES} modes")
    pair = qubit_branch_pair(theta)
    zero = np.array([1.0, 0.0])
    rotated = qubit_rotation(pair.theta) @ zero
    p0 = product_state(zero, n_modes)
    p1 = product_state(rotated, n_modes)
    if which == "branch0":
        amps = p0
    elif which == "branch1":
        amps = p1
    elif which == "superposition":
        zn = overlap_power(pair.z, n_modes)
        amps = (p0 + p1) / math.sqrt(2.0 + 2.0 * zn)
    else:
        omega_plus, omega_minus = collapsed_outcomes(pair, n_modes)
        coeff = omega_plus if which == "omega_plus" else omega_minus
        amps = coeff.c0 * p0 + coeff.c1 * p1
    return DenseState(n_modes, amps)


@dataclass(frozen=True)
class HelstromDecomposition:
    """Spectral data of |phi><phi| - |uphi><uphi| for two unit vectors."""

    eigenvalue_positive: float
    eigenvalue_negative: float
    projector_positive: np.ndarray
    projector_negative: np.ndarray


def dense_helstrom(phi: np.ndarray, uphi: np.ndarray) -> HelstromDecomposition:
    """Eigendecomposition of the discrimination observable rho - sigma.

    The two nonzero eigenvalues are +/- sqrt(1 - z^2) where z is the
    vectors' overlap; the corresponding rank-1 projectors realize the
    minimum-error measurement (the positive branch is the outcome
    assigned to |phi>).
    """
    phi = np.asarray(phi, dtype=complex)
    uphi = np.asarray(uphi, dtype=complex)
    for v in (phi, uphi):
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise DomainError("inputs must be unit vectors")
    observable = np.outer(phi, phi.conj()) - np.outer(uphi, uphi.conj())
    lam, vecs = np.linalg.eigh(observable)
    if np.abs(lam).max() < 1e-6:
        raise SingularOverlapError("states are indistinguishable: observable vanishes")
    v_neg, v_pos = vecs[:, 0], vecs[:, -1]
    return HelstromDecomposition(
        eigenvalue_positive=float(lam[-1]),
        eigenvalue_negative=float(lam[0]),
        projector_positive=np.outer(v_pos, v_pos.conj()),
        projector_negative=np.outer(v_neg, v_neg.conj()),
    )


def apply_one_local(amps: np.ndarray, h: np.ndarray, n_modes: int) -> np.ndarray:
    """Apply sum_i h^(i) to a statevector without materializing the matrix."""
    out = np.zeros_like(amps, dtype=complex)
    tensor = amps.reshape([2] * n_modes)
    for site in range(n_modes):
        moved = np.moveaxis(tensor, site, 0)
        acted = np.tensordot(h, moved, axes=([1], [0]))
        out += np.moveaxis(acted, 0, site).reshape(-1)
    return out


def one_local_matrix(h: np.ndarray, n_modes: int) -> np.ndarray:
    """Dense matrix of sum_i h^(i) on N qubits (N <= 10)."""
    if n_modes > MAX_OPERATOR_MODES:
        raise SizeLimitError(
            f"dense operators support at most {MAX_OPERATOR_MODES} modes, got {n_modes}"
        )
    dim = 2**n_modes
    out = np.zeros((dim, dim), dtype=complex)
    for site in range(n_modes):
        out += np.kron(
            np.kron(np.eye(2**site), h), np.eye(2 ** (n_modes - 1 - site))
        )
    return out


def field_generator(vartheta: float) -> np.ndarray:
    """Single-qubit term of the probe field, (cos vt sigma_x + sin vt sigma_z)/2."""
    return 0.5 * (math.cos(vartheta) * PAULI_X + math.sin(vartheta) * PAULI_Z)


def dense_moments(state: DenseState, vartheta: float) -> tuple[float, float]:
    """(<T>, <T^2>) of the probe generator, evaluated by matrix-free application."""
    tv = apply_one_local(state.amps, field_generator(vartheta), state.n_modes)
    return float(np.vdot(state.amps, tv).real), float(np.vdot(tv, tv).real)


def dense_deviation(state: DenseState, vartheta: float) -> float:
    m1, m2 = dense_moments(state, vartheta)
    return math.sqrt(max(m2 - m1 * m1, 0.0))


def dense_max_deviation(state: DenseState) -> tuple[float, float]:
    return maximize_scalar(
        lambda vt: dense_deviation(state, vt), -math.pi, math.pi, coarse=721, xtol=1e-8
    )


def dense_evolve(state: DenseState, hamiltonian: np.ndarray, t: float) -> DenseState:
    """exp(-i H t)|state> through the eigendecomposition of H."""
    if state.n_modes > MAX_OPERATOR_MODES:
        raise SizeLimitError(
            f"dense evolution supports at most {MAX_OPERATOR_MODES} modes"
        )
    h = np.asarray(hamiltonian, dtype=complex)
    if h.shape != (state.amps.size, state.amps.size):
        raise DomainError("Hamiltonian dimension does not match the state")
    if np.abs(h - h.conj().T).max() > 1e-10:
        raise DomainError("Hamiltonian must be Hermitian")
    lam, vecs = np.linalg.eigh(h)
    coeffs = vecs.conj().T @ state.amps
    evolved = vecs @ (np.exp(-1j * lam * t) * coeffs)
    evolved = evolved / np.linalg.norm(evolved)
    return DenseState(state.n_modes, evolved)


def dense_inner(a: DenseState, b: DenseState) -> complex:
    if a.n_modes != b.n_modes:
        raise DomainError("states live on different mode counts")
    return complex(np.vdot(a.amps, b.amps))


def first_orthogonalization_time(
    hamiltonian: np.ndarray, amps: np.ndarray, epsilon: float, times: np.ndarray
) -> float | None:
    """Earliest grid time at which |<psi|exp(-iHt)|psi>| drops to epsilon."""
    lam, vecs = np.linalg.eigh(hamiltonian)
    weights = np.abs(vecs.conj().T @ amps) ** 2
    overlap = np.exp(-1j * np.outer(times, lam)) @ weights
    hits = np.nonzero(np.abs(overlap) <= epsilon)[0]
    return float(times[hits[0]]) if hits.size else None


def site_reduced(amps: np.ndarray, site: int, n_modes: int) -> np.ndarray:
    """Single-site reduced density matrix of a pure N-qubit state."""
    tensor = np.moveaxis(amps.reshape([2] * n_modes), site, 0).reshape(2, -1)
    return tensor @ tensor.conj().T


def site_entropy(amps: np.ndarray, site: int, n_modes: int) -> float:
    lam = np.clip(np.linalg.eigvalsh(site_reduced(amps, site, n_modes)).real, 0.0, None)
    lam = lam[lam > 1e-300]
    return float(-(lam * np.log(lam)).sum())


def dicke_isometry(n_modes: int) -> np.ndarray:
    """Isometry from the symmetric subspace (ladder index k) into 2^N space."""
    if n_modes > MAX_STATE_MODES:
        raise SizeLimitError(f"isometry supports at most {MAX_STATE_MODES} modes")
    iso = np.zeros((2**n_modes, n_modes + 1))
    weights = [
        math.exp(
            -0.5
            * (math.lgamma(n_modes + 1) - math.lgamma(k + 1) - math.lgamma(n_modes - k + 1))
        )
        for k in range(n_modes + 1)
    ]
    for basis_index in range(2**n_modes):
        k = basis_index.bit_count()
        iso[basis_index, k] = weights[k]
    return iso


def separable_cm_fidelity(z, n_modes: int) -> float:
    """Expected branch fidelity of mode-wise collapse outcomes.

    Measuring every mode separately with the single-mode collapsing
    measurement has 2^N possible product outcomes.  Averaging the
    fidelity |<outcome|branch>|^2 with the rotated branch uniformly
    over that outcome set gives exactly 2^-N (the outcome vectors
    resolve the identity on each mode), which this routine confirms by
    explicit enumeration of all sign patterns.
    """
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    if n_modes > MAX_OPERATOR_MODES:
        raise SizeLimitError(
            f"outcome enumeration supports at most {MAX_OPERATOR_MODES} modes"
        )
    cm = cm_single(z)
    uphi = np.array([cm.z, math.sqrt(1.0 - cm.z**2)])
    fid_plus = float(np.dot(cm.xi_plus, uphi) ** 2)
    fid_minus = float(np.dot(cm.xi_minus, uphi) ** 2)
    weight = 0.5**n_modes
    total = 0.0
    for pattern in itertools.product((fid_minus, fid_plus), repeat=n_modes):
        outcome_fidelity = 1.0
        for factor in pattern:
            outcome_fidelity *= factor
        total += weight * outcome_fidelity
    return total


@dataclass(frozen=True)
class GhzHierarchyReport:
    """Probe quality of a two-layer parity superposition versus its branch."""

    n_modes: int
    superposition_max_deviation: float
    branch_max_deviation: float
    ratio: float
    site_entropies: list[float]


def ghz_hierarchy_check(n_modes: int) -> GhzHierarchyReport:
    """Compare an entangled-branch superposition against one branch.

    The state places a control qubit in front of N-qubit even/odd
    parity GHZ states; although entangled, its best 1-local probe
    deviation is no better (up to 1/N corrections) than that of the
    single branch, and every single-site reduction stays mixed.
    """
    if not isinstance(n_modes, int) or not 2 <= n_modes <= MAX_OPERATOR_MODES:
        raise DomainError(
            f"mode count must be an integer in [2, {MAX_OPERATOR_MODES}], got {n_modes}"
        )
    up = np.array([1.0, 0.0])
    down = np.array([0.0, 1.0])
    all_up = product_state(up, n_modes)
    all_down = product_state(down, n_modes)
    ghz_plus = (all_up + all_down) / math.sqrt(2.0)
    ghz_minus = (all_up - all_down) / math.sqrt(2.0)
    state = (np.kron(up, ghz_plus) + np.kron(down, ghz_minus)) / math.sqrt(2.0)
    branch = np.kron(up, ghz_plus)
    n_total = n_modes + 1
    dense_state = DenseState(n_total, state.astype(complex))
    dense_branch = DenseState(n_total, branch.astype(complex))
    _, dev_state = dense_max_deviation(dense_state)
    _, dev_branch = dense_max_deviation(dense_branch)
    entropies = [site_entropy(state.astype(complex), k, n_total) for k in range(n_total)]
    return GhzHierarchyReport(
        n_modes=n_modes,
        superposition_max_deviation=dev_state,
        branch_max_deviation=dev_branch,
        ratio=dev_state / dev_branch,
        site_entropies=entropies,
    )
