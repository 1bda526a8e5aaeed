"""Orthogonalization dynamics under the collapse-measurement generator.

The Hamiltonian omega * sum_i (E_- - E_+)^(i) built from the single-mode
measurement projectors factorizes: since E_+ + E_- is the identity on
each mode's branch plane and both are projectors, the propagator is the
N-fold tensor power of the 2x2 unitary

    M(t) = exp(-i omega t) E_-  +  exp(+i omega t) E_+.

The survival amplitude F(t) = <psi| M(t)^{tensor N} |psi> therefore
reduces to N-th powers of four 2x2 matrix elements, each a closed form
in (z, omega t).  A stochastic experiment compares the generator's
orthogonalization time against random norm-matched 1-local Hamiltonians.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .collapse import cm_single
from .effective_states import SINGULAR_Z, _as_real, overlap_power, qubit_branch_pair
from .errors import DomainError
from .oracle import (
    MAX_OPERATOR_MODES,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    dense_superposition,
    first_orthogonalization_time,
    one_local_matrix,
)

THREADS_ENV = "CATCOLLAPSE_THREADS"


def worker_count() -> int:
    """Thread count for internal sweeps, overridable via CATCOLLAPSE_THREADS."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        count = int(raw)
    except ValueError:
        return 1
    return max(count, 1)


@dataclass(frozen=True)
class OverlapTrace:
    """Survival amplitude F(t) sampled on a time grid (hbar = 1)."""

    z: float
    n_modes: int
    omega: float
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if np.abs(self.values).max() > 1.0 + 1e-12:
            raise DomainError("survival amplitude exceeded unit magnitude")
        at_zero = np.abs(self.times) == 0.0
        if at_zero.any() and np.abs(self.values[at_zero] - 1.0).max() > 1e-12:
            raise DomainError("survival amplitude must start at 1")


def gram_factors(z: float, omega_t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The three distinct matrix elements of M(t) between the branch vectors.

    Returns (m00, m01, m11) with m00 = <phi|M|phi>, m01 = <phi|M U|phi>
    (= <phi|U^dag M|phi> for real z), m11 = <phi|U^dag M U|phi>:

        m00 = cos(wt) - i s sin(wt),  m01 = z cos(wt),
        m11 = cos(wt) + i s sin(wt),  with s = sqrt(1 - z^2).
    """
    s = math.sqrt(1.0 - z * z)
    c = np.cos(omega_t)
    sn = np.sin(omega_t)
    return c - 1j * s * sn, z * c, c + 1j * s * sn


def mode_unitary(z: float, omega_t: float) -> np.ndarray:
    """The per-mode propagator M(t) in frame coordinates, built from the
    measurement projectors themselves (useful as a cross-check)."""
    cm = cm_single(z)
    p_minus = np.outer(cm.xi_minus, cm.xi_minus)
    p_plus = np.outer(cm.xi_plus, cm.xi_plus)
    return np.exp(-1j * omega_t) * p_minus + np.exp(1j * omega_t) * p_plus


def overlap_trace(z, n_modes: int, omega: float, times) -> OverlapTrace:
    """Survival amplitude of the equal superposition under the generator.

    F(t) = (m00^N + m01^N + m10^N + m11^N) / (2 + 2 z^N) with the matrix
    elements of ``gram_factors`` (m10 = m01 for real z).
    """
    z = _as_real(z, "overlap z")
    if not 0.0 <= z <= SINGULAR_Z:
        raise DomainError(f"overlap must lie in [0, {SINGULAR_Z}], got {z}")
    omega = _as_real(omega, "omega")
    if omega <= 0.0:
        raise DomainError(f"energy scale must be positive, got {omega}")
    if not isinstance(n_modes, int) or n_modes < 1:
        raise DomainError(f"mode count must be a positive integer, got {n_modes}")
    t = np.asarray(times, dtype=float)
    m00, m01, m11 = gram_factors(z, omega * t)
    zn = overlap_power(z, n_modes)
    values = (m00**n_modes + m11**n_modes + 2.0 * m01**n_modes) / (2.0 + 2.0 * zn)
    return OverlapTrace(z=z, n_modes=n_modes, omega=omega, times=t, values=values)


def recurrence_scan(z, n_modes: int, omega: float, grid_points: int = 2001) -> float:
    """Largest |F| on the interior of one half-period of the generator.

    The scan covers (0, pi/omega) on a uniform grid.  The endpoint
    t = pi/omega is excluded: there the per-mode propagator is -1 times
    the identity, so the N-mode evolution is a pure global phase and
    |F| returns to 1 for every overlap; only the interior distinguishes
    orthogonal branches (true recurrences, max exactly 1) from
    nonorthogonal ones (max strictly below 1).
    """
    if grid_points < 3:
        raise DomainError("grid needs at least 3 points")
    times = np.linspace(0.0, math.pi / omega, grid_points)[1:-1]
    trace = overlap_trace(z, n_modes, omega, times)
    return float(np.abs(trace.values).max())


@dataclass(frozen=True)
class SpeedLimitReport:
    """Outcome of the random-Hamiltonian orthogonalization race.

    ``cm_time`` is the earliest grid time at which the measurement
    generator drives the superposition's survival amplitude down to
    ``epsilon``; ``trial_times`` holds the same quantity per random
    norm-matched 1-local Hamiltonian (None when it never happens on the
    grid); ``counterexamples`` counts trials that finished strictly
    earlier.
    """

    theta: float
    n_modes: int
    trials: int
    epsilon: float
    seed: int
    t_max: float
    grid_points: int
    generator_norm: float
    cm_time: float | None
    trial_times: list[float | None]
    counterexamples: int


def _random_one_local(rng: np.random.Generator, n_modes: int) -> np.ndarray:
    """Sum of independent single-qubit terms r_i . sigma with r_i uniform
    in the unit ball; resamples in the measure-zero degenerate case."""
    while True:
        h = np.zeros((2**n_modes, 2**n_modes), dtype=complex)
        for site in range(n_modes):
            direction = rng.normal(size=3)
            direction /= np.linalg.norm(direction)
            r = direction * rng.random() ** (1.0 / 3.0)
            single = r[0] * PAULI_X + r[1] * PAULI_Y + r[2] * PAULI_Z
            h += np.kron(
                np.kron(np.eye(2**site), single), np.eye(2 ** (n_modes - 1 - site))
            )
        if np.abs(h).max() > 1e-12:
            return h


def speed_limit_trial(
    theta,
    n_modes: int,
    trials: int,
    epsilon: float = 0.05,
    seed: int = 0,
    t_max: float = math.pi,
    grid_points: int = 2001,
) -> SpeedLimitReport:
    """Race random 1-local Hamiltonians against the measurement generator.

    Each trial draws one Hamiltonian, rescales it so its dense spectral
    norm matches the generator's, and records the earliest grid time at
    which it pushes |<psi|exp(-iHt)|psi>| down to ``epsilon``.  Results
    are deterministic for a fixed seed (each trial derives its own
    generator from (seed, trial index)), independent of the thread
    count used.
    """
    if not isinstance(n_modes, int) or not 1 <= n_modes <= MAX_OPERATOR_MODES:
        raise DomainError(
            f"mode count must be an integer in [1, {MAX_OPERATOR_MODES}], got {n_modes}"
        )
    if trials < 0:
        raise DomainError(f"trial count must be nonnegative, got {trials}")
    if not 0.0 < epsilon < 1.0:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    pair = qubit_branch_pair(theta)
    psi = dense_superposition(pair.theta, n_modes, "superposition").amps
    cm = cm_single(pair.z)
    single_generator = np.outer(cm.xi_minus, cm.xi_minus) - np.outer(cm.xi_plus, cm.xi_plus)
    h_cm = one_local_matrix(single_generator, n_modes)
    generator_norm = float(np.abs(np.linalg.eigvalsh(h_cm)).max())
    times = np.linspace(0.0, t_max, grid_points)
    cm_time = first_orthogonalization_time(h_cm, psi, epsilon, times)

    def run_trial(index: int) -> float | None:
        rng = np.random.default_rng([seed, index])
        h = _random_one_local(rng, n_modes)
        norm = float(np.abs(np.linalg.eigvalsh(h)).max())
        h *= generator_norm / norm
        return first_orthogonalization_time(h, psi, epsilon, times)

    workers = worker_count()
    if workers > 1 and trials > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trial_times = list(pool.map(run_trial, range(trials)))
    else:
        trial_times = [run_trial(k) for k in range(trials)]

    counterexamples = sum(
        1
        for t in trial_times
        if t is not None and (cm_time is None or t < cm_time - 1e-12)
    )
    return SpeedLimitReport(
        theta=pair.theta,
        n_modes=n_modes,
        trials=trials,
        epsilon=epsilon,
        seed=seed,
        t_max=t_max,
        grid_points=grid_points,
        generator_norm=generator_norm,
        cm_time=cm_time,
        trial_times=trial_times,
        counterexamples=counterexamples,
    )
