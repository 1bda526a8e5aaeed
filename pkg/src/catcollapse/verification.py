"""Cross-checks of every closed form against the dense reference path."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import (
    collapse,
    dynamics,
    effective_states,
    entanglement,
    oracle,
    photonic,
    spin_metrology,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def _inner_products_vs_dense() -> float:
    worst = 0.0
    for z in (0.0, 0.3, 0.6, 0.9):
        theta = math.acos(z)
        pair = effective_states.qubit_branch_pair(theta)
        for n in range(1, 7):
            psi = effective_states.superposition(pair, n)
            omega_plus, omega_minus = collapse.collapsed_outcomes(pair, n)
            dense = {
                kind: oracle.dense_superposition(theta, n, kind)
                for kind in ("superposition", "omega_plus", "omega_minus")
            }
            pairs = [
                (psi, psi, "superposition", "superposition"),
                (psi, omega_plus, "superposition", "omega_plus"),
                (omega_plus, omega_minus, "omega_plus", "omega_minus"),
                (psi, omega_minus, "superposition", "omega_minus"),
            ]
            for a, b, ka, kb in pairs:
                lhs = effective_states.two_branch_inner(a, b)
                rhs = oracle.dense_inner(dense[ka], dense[kb])
                worst = max(worst, abs(lhs - rhs))
    return worst


def _cm_vs_dense_helstrom() -> float:
    worst = 0.0
    for z in np.arange(0.0, 0.96, 0.05):
        z = float(z)
        cm = collapse.cm_single(z)
        phi = np.array([1.0, 0.0])
        uphi = np.array([z, math.sqrt(1.0 - z * z)])
        spectral = oracle.dense_helstrom(phi, uphi)
        worst = max(
            worst,
            float(
                np.linalg.norm(
                    spectral.projector_positive - np.outer(cm.xi_minus, cm.xi_minus)
                )
            ),
            float(
                np.linalg.norm(
                    spectral.projector_negative - np.outer(cm.xi_plus, cm.xi_plus)
                )
            ),
            abs(spectral.eigenvalue_positive - math.sqrt(1.0 - z * z)),
        )
    return worst


def _spectral_identity() -> float:
    worst = 0.0
    for z in np.arange(0.0, 0.96, 0.05):
        z = float(z)
        cm = collapse.cm_single(z)
        phi = np.array([1.0, 0.0])
        uphi = np.array([z, math.sqrt(1.0 - z * z)])
        observable = np.outer(phi, phi) - np.outer(uphi, uphi)
        rebuilt = math.sqrt(1.0 - z * z) * (
            np.outer(cm.xi_minus, cm.xi_minus) - np.outer(cm.xi_plus, cm.xi_plus)
        )
        worst = max(worst, float(np.abs(observable - rebuilt).max()))
    return worst


def _dicke_embedding_fidelity() -> float:
    worst = 0.0
    for theta in (0.3, 0.9, math.pi / 2):
        for n in (2, 6, 10):
            iso = oracle.dicke_isometry(n)
            for kind in ("superposition", "omega_plus", "omega_minus", "branch1"):
                compact = spin_metrology.dicke_embed(theta, n, kind)
                dense = oracle.dense_superposition(theta, n, kind)
                fid = abs(np.vdot(iso @ compact.amps, dense.amps)) ** 2
                worst = max(worst, abs(1.0 - fid))
    return worst


def _dicke_moments_vs_dense() -> float:
    worst = 0.0
    angles = np.linspace(-math.pi, math.pi, 11)
    for theta in (0.1, 0.5, 1.0, math.pi / 2):
        for n in (2, 5, 8, 10):
            compact = spin_metrology.dicke_embed(theta, n, "superposition")
            dense = oracle.dense_superposition(theta, n, "superposition")
            for vt in angles:
                m1, m2 = spin_metrology.dicke_moments(compact, float(vt))
                d1, d2 = oracle.dense_moments(dense, float(vt))
                worst = max(worst, abs(m1 - d1), abs(m2 - d2))
    return worst


def _generator_identity() -> float:
    worst = 0.0
    for theta in (0.2, 0.7, math.pi / 4, math.pi / 2):
        for n in (2, 6, 10):
            worst = max(worst, spin_metrology.cm_generator_check(theta, n))
    return worst


def _overlap_trace_vs_dense() -> float:
    worst = 0.0
    times = np.linspace(0.0, math.pi, 21)
    n = 6
    for z in (0.0, 0.25, 0.5, 0.75, 0.9):
        theta = math.acos(z)
        trace = dynamics.overlap_trace(z, n, 1.0, times)
        psi = oracle.dense_superposition(theta, n, "superposition")
        cm = collapse.cm_single(z)
        single = np.outer(cm.xi_minus, cm.xi_minus) - np.outer(cm.xi_plus, cm.xi_plus)
        h = oracle.one_local_matrix(single, n)
        for t, f_closed in zip(times, trace.values):
            evolved = oracle.dense_evolve(psi, h, float(t))
            f_dense = oracle.dense_inner(psi, evolved)
            worst = max(worst, abs(f_closed - f_dense))
    return worst


def _reduced_state_vs_dense() -> float:
    worst = 0.0
    for z in np.arange(0.0, 0.91, 0.1):
        z = float(z)
        theta = math.acos(z)
        pair = effective_states.branch_pair_from_overlap(z)
        for kind in ("superposition", "omega_plus"):
            if kind == "superposition":
                state = effective_states.superposition(pair, 2)
            else:
                state, _ = collapse.collapsed_outcomes(pair, 2)
            rho = entanglement.reduced_state(state).matrix
            dense = oracle.dense_superposition(theta, 2, kind)
            # The spin realization's frame is the computational basis,
            # so the two matrices compare entrywise.
            rho_dense = oracle.site_reduced(dense.amps, 0, 2)
            worst = max(worst, float(np.abs(rho - rho_dense).max()))
    return worst


def _entropy_basis_independence() -> float:
    worst = 0.0
    for z in (0.0, 0.25, 0.5, 0.75, 0.9):
        theta = math.acos(z)
        pair = effective_states.branch_pair_from_overlap(z)
        psi = effective_states.superposition(pair, 2)
        s_frame = entanglement.von_neumann_entropy(entanglement.reduced_state(psi))
        dense = oracle.dense_superposition(theta, 2, "superposition")
        s_dense = oracle.site_entropy(dense.amps, 0, 2)
        worst = max(worst, abs(s_frame - s_dense))
    return worst


def _separable_fidelity() -> float:
    worst = 0.0
    for n in range(1, 9):
        for z in (0.0, 0.5):
            got = oracle.separable_cm_fidelity(z, n)
            worst = max(worst, abs(got - 0.5**n))
    return worst


def _photonic_two_path_moments() -> float:
    worst = 0.0
    for alpha in (0.6, 1.3):
        cutoff = 45
        for state in (
            photonic.coherent_vector(alpha, cutoff),
            photonic.cat_vector(alpha, +1, cutoff),
            photonic.cat_vector(alpha, -1, cutoff),
        ):
            mean_n, mean_n2 = photonic.number_moments(state)
            a = photonic.ladder_matrix(cutoff)
            num = a.conj().T @ a
            nv = num @ state.amps
            worst = max(
                worst,
                abs(mean_n - np.vdot(state.amps, nv).real),
                abs(mean_n2 - np.vdot(nv, nv).real),
            )
    return worst


def run_checks() -> list[CheckResult]:
    """Run the whole dense cross-check suite and return one row per check."""
    return [
        CheckResult("two-branch inner products vs dense", _inner_products_vs_dense(), 1e-10),
        CheckResult("measurement projectors vs dense spectral decomposition", _cm_vs_dense_helstrom(), 1e-8),
        CheckResult("discrimination observable spectral identity", _spectral_identity(), 1e-10),
        CheckResult("symmetric-subspace embedding fidelity", _dicke_embedding_fidelity(), 1e-10),
        CheckResult("collective-generator moments vs dense", _dicke_moments_vs_dense(), 1e-10),
        CheckResult("generator identity residual", _generator_identity(), 1e-10),
        CheckResult("survival amplitude closed form vs dense evolution", _overlap_trace_vs_dense(), 1e-10),
        CheckResult("reduced states: frame algebra vs dense partial trace", _reduced_state_vs_dense(), 1e-12),
        CheckResult("entropy basis independence", _entropy_basis_independence(), 1e-10),
        CheckResult("mode-wise outcome fidelity equals 2^-N", _separable_fidelity(), 1e-12),
        CheckResult("photonic moments: operator vs amplitude sums", _photonic_two_path_moments(), 1e-10),
    ]
