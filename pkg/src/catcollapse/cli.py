"""Command-line surface: figure sweeps as CSV, reports as JSON, plus a
dense verification run.

Exit codes: 0 success, 2 domain error, 3 verification failure, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from .collapse import (
    CMConditionReport,
    MeasurementSet,
    branch_coefficients,
    cm_single,
    helstrom_success_probability,
    mary_cm,
)
from .dynamics import overlap_trace, speed_limit_trial
from .entanglement import entropy_sweep
from .errors import DomainError
from .photonic import hcs_collapse_report
from .spin_metrology import collective_matrices, dicke_embed
from .verification import run_checks

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_VERIFY = 3
EXIT_USAGE = 64

FIG1_HEADER = "theta,vartheta,dev_superposition,dev_collapsed"
FIG2_HEADER = "z,omega_t,f_re,f_im,f_abs"
FIG3_HEADER = "z,s_psi,s_omega_plus"


class _Parser(argparse.ArgumentParser):
    """argparse with the usage exit code fixed at 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs of one CLI invocation."""

    subcommand: str
    n_modes: int = 10
    theta: float = math.pi / 2
    z: float = 0.0
    omega: float = 1.0
    theta_grid: int = 60
    vartheta_grid: int = 721
    z_grid: int = 21
    t_grid: int = 101
    cutoff: int | None = None
    alpha: float = 1.0
    seed: int = 0
    trials: int = 0
    epsilon: float = 0.05
    m: int | None = None
    gram_path: str | None = None
    out: str | None = None
    fmt: str = "csv"


def _fmt(x: float) -> str:
    # 12 significant digits; adding 0.0 normalizes negative zero.
    return format(float(x) + 0.0, ".12g")


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _table_text(header: str, rows: list[tuple], fmt: str) -> str:
    names = header.split(",")
    if fmt == "json":
        records = [
            {name: float(value) for name, value in zip(names, row)} for row in rows
        ]
        return json.dumps(records, indent=2) + "\n"
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def _write_json(path: str | None, payload):
    _write_text(path, json.dumps(_jsonable(payload), indent=2) + "\n")


def _fig1_rows(cfg: RunConfig) -> list[tuple]:
    thetas = [(k + 1) * (math.pi / 2) / cfg.theta_grid for k in range(cfg.theta_grid)]
    varthetas = [-math.pi + j * 2.0 * math.pi / cfg.vartheta_grid for j in range(cfg.vartheta_grid)]
    jx, _, jz = collective_matrices(cfg.n_modes)
    generators = [math.cos(vt) * jx + math.sin(vt) * jz for vt in varthetas]
    rows = []
    for theta in thetas:
        states = (
            dicke_embed(theta, cfg.n_modes, "superposition"),
            dicke_embed(theta, cfg.n_modes, "omega_plus"),
        )
        for vt, generator in zip(varthetas, generators):
            deviations = []
            for state in states:
                acted = generator @ state.amps
                m1 = np.vdot(state.amps, acted).real
                m2 = np.vdot(acted, acted).real
                deviations.append(math.sqrt(max(m2 - m1 * m1, 0.0)))
            rows.append((theta, vt, deviations[0], deviations[1]))
    return rows


def _fig2_rows(cfg: RunConfig) -> list[tuple]:
    z_values = [k / cfg.z_grid for k in range(cfg.z_grid)]
    times = np.linspace(0.0, math.pi / cfg.omega, cfg.t_grid)
    rows = []
    for z in z_values:
        trace = overlap_trace(z, cfg.n_modes, cfg.omega, times)
        for t, value in zip(trace.times, trace.values):
            rows.append((z, cfg.omega * t, value.real, value.imag, abs(value)))
    return rows


def _fig3_rows(cfg: RunConfig) -> list[tuple]:
    z_values = [k / cfg.z_grid for k in range(cfg.z_grid)]
    return entropy_sweep(z_values)


def _cm_payload(cfg: RunConfig):
    if cfg.gram_path is not None:
        with open(cfg.gram_path) as handle:
            gram = json.load(handle)
        result = mary_cm(gram)
    elif cfg.m is not None:
        gram = np.full((cfg.m, cfg.m), cfg.z)
        np.fill_diagonal(gram, 1.0)
        result = mary_cm(gram)
    else:
        cm = cm_single(cfg.z)
        return {
            "kind": "binary",
            "z": cfg.z,
            "xi_plus_frame": cm.xi_plus,
            "xi_minus_frame": cm.xi_minus,
            "xi_plus_on_branches": branch_coefficients(cm.xi_plus, cfg.z),
            "xi_minus_on_branches": branch_coefficients(cm.xi_minus, cfg.z),
            "success_probability": helstrom_success_probability(cfg.z),
        }
    if isinstance(result, MeasurementSet):
        return {
            "kind": "mary",
            "m": result.m,
            "satisfied": True,
            "residuals": asdict(result.conditions),
            "gram": result.gram,
            "measurement_vectors": result.xi,
            "branch_overlaps": result.state_overlaps,
        }
    assert isinstance(result, CMConditionReport)
    return {
        "kind": "mary",
        "m": result.m,
        "satisfied": False,
        "residuals": asdict(result),
    }


def _run_verify(cfg: RunConfig) -> int:
    checks = run_checks()
    width = max(len(c.name) for c in checks)
    lines = []
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        lines.append(
            f"{check.name:<{width}}  residual {check.residual:10.3e}"
            f"  tolerance {check.tolerance:8.1e}  {status}"
        )
    all_passed = all(c.passed for c in checks)
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    print("\n".join(lines))
    if cfg.out is not None:
        _write_json(
            cfg.out,
            [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in checks
            ],
        )
    return EXIT_OK if all_passed else EXIT_VERIFY


def build_parser() -> _Parser:
    parser = _Parser(prog="catcollapse", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    fig1 = sub.add_parser("fig1", help="probe-field deviation sweep (CSV)")
    fig1.add_argument("--n", type=int, default=10, dest="n_modes")
    fig1.add_argument("--theta-grid", type=int, default=60)
    fig1.add_argument("--vartheta-grid", type=int, default=721)

    fig2 = sub.add_parser("fig2", help="survival amplitude over (z, t) (CSV)")
    fig2.add_argument("--n", type=int, default=10, dest="n_modes")
    fig2.add_argument("--omega", type=float, default=1.0)
    fig2.add_argument("--z-grid", type=int, default=21)
    fig2.add_argument("--t-grid", type=int, default=101)

    fig3 = sub.add_parser("fig3", help="two-mode entanglement entropies (CSV)")
    fig3.add_argument("--z-grid", type=int, default=200)

    for p in (fig1, fig2, fig3):
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")

    cm = sub.add_parser("cm", help="collapsing measurement report (JSON)")
    cm.add_argument("--z", type=float, required=True)
    group = cm.add_mutually_exclusive_group()
    group.add_argument("--m", type=int, help="branch count for a symmetric Gram with off-diagonal z")
    group.add_argument("--gram", dest="gram_path", help="JSON file holding an m x m Gram matrix")

    hcs = sub.add_parser("hcs", help="hierarchical cat collapse report (JSON)")
    hcs.add_argument("--alpha", type=float, required=True)
    hcs.add_argument("--n", type=int, default=1, dest="n_modes")
    hcs.add_argument("--cutoff", type=int, default=None)

    speed = sub.add_parser("speedlimit", help="random-Hamiltonian orthogonalization race (JSON)")
    speed.add_argument("--n", type=int, default=8, dest="n_modes")
    speed.add_argument("--theta", type=float, default=math.pi / 2)
    speed.add_argument("--trials", type=int, default=200)
    speed.add_argument("--seed", type=int, default=0)
    speed.add_argument("--epsilon", type=float, default=0.05)

    verify = sub.add_parser("verify", help="run the dense cross-check suite")

    for p in (fig1, fig2, fig3, cm, hcs, speed, verify):
        p.add_argument("-o", "--out", default=None, help="output path (default stdout)")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(**{k: v for k, v in fields.items() if k in RunConfig.__dataclass_fields__})


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        if cfg.subcommand == "fig1":
            _write_text(cfg.out, _table_text(FIG1_HEADER, _fig1_rows(cfg), cfg.fmt))
        elif cfg.subcommand == "fig2":
            _write_text(cfg.out, _table_text(FIG2_HEADER, _fig2_rows(cfg), cfg.fmt))
        elif cfg.subcommand == "fig3":
            _write_text(cfg.out, _table_text(FIG3_HEADER, _fig3_rows(cfg), cfg.fmt))
        elif cfg.subcommand == "cm":
            _write_json(cfg.out, _cm_payload(cfg))
        elif cfg.subcommand == "hcs":
            cutoff = cfg.cutoff
            if cutoff is None:
                cutoff = int(math.ceil(4.0 * cfg.alpha**2 + 25.0)) + 15
            _write_json(cfg.out, asdict(hcs_collapse_report(cfg.alpha, cfg.n_modes, cutoff)))
        elif cfg.subcommand == "speedlimit":
            report = speed_limit_trial(
                cfg.theta, cfg.n_modes, cfg.trials, epsilon=cfg.epsilon, seed=cfg.seed
            )
            _write_json(cfg.out, asdict(report))
        elif cfg.subcommand == "verify":
            return _run_verify(cfg)
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown subcommand {cfg.subcommand}")
    except DomainError as exc:
        print(f"catcollapse: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"catcollapse: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
