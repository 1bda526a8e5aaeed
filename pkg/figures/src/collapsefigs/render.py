"""Turn the three figure CSVs into images.

The renderer is read-only over its input: it validates the header against
the schema for the requested figure id, parses the rows, and draws

- figure 1: deviation versus probe angle for a few rotation-angle slices,
  superposition solid, collapsed dashed;
- figure 2: a heatmap of the survival amplitude's real part over the
  (overlap, time) grid;
- figure 3: the two entropy curves (solid/dashed) with a marker at each
  crossing.

No quantity is computed beyond reading the CSV; crossings are located by
linear interpolation between adjacent samples.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

SCHEMAS = {
    1: ["theta", "vartheta", "dev_superposition", "dev_collapsed"],
    2: ["z", "omega_t", "f_re", "f_im", "f_abs"],
    3: ["z", "s_psi", "s_omega_plus"],
}


class SchemaError(ValueError):
    """The CSV does not carry the expected figure schema."""


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    input_csv: str
    output_image: str
    solid_label: str = "superposition"
    dashed_label: str = "collapsed"
    max_slices: int = 4


@dataclass(frozen=True)
class RenderResult:
    figure_id: int
    rows: int
    output_image: str
    crossings: list[float] = field(default_factory=list)


def load_table(path: str, figure_id: int) -> np.ndarray:
    """Read and validate one figure CSV; returns a (rows, columns) array."""
    if figure_id not in SCHEMAS:
        raise SchemaError(f"unknown figure id {figure_id}")
    expected = SCHEMAS[figure_id]
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header {','.join(expected)}")
        if header != expected:
            raise SchemaError(
                f"{path}: header {','.join(header)} does not match "
                f"figure {figure_id} schema {','.join(expected)}"
            )
        try:
            rows = [[float(cell) for cell in row] for row in reader if row]
        except ValueError as exc:
            raise SchemaError(f"{path}: non-numeric cell: {exc}") from exc
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    table = np.asarray(rows, dtype=float)
    if table.shape[1] != len(expected):
        raise SchemaError(f"{path}: expected {len(expected)} columns, got {table.shape[1]}")
    return table


def _crossings(x: np.ndarray, gap: np.ndarray) -> list[float]:
    """Zero crossings of ``gap`` located by linear interpolation."""
    found = []
    for k in range(len(x) - 1):
        a, b = gap[k], gap[k + 1]
        if a == 0.0:
            continue
        if (a < 0.0 < b) or (b < 0.0 < a):
            t = a / (a - b)
            found.append(float(x[k] + t * (x[k + 1] - x[k])))
    return found


def _render_fig1(table: np.ndarray, spec: FigureSpec, ax) -> RenderResult:
    thetas = np.unique(table[:, 0])
    take = min(spec.max_slices, len(thetas))
    picks = thetas[np.linspace(0, len(thetas) - 1, take).round().astype(int)]
    colors = plt.cm.viridis(np.linspace(0.15, 0.85, len(picks)))
    for theta, color in zip(picks, colors):
        block = table[table[:, 0] == theta]
        order = np.argsort(block[:, 1])
        ax.plot(
            block[order, 1], block[order, 2], "-", color=color,
            label=f"{spec.solid_label}, theta={theta:.3f}",
        )
        ax.plot(block[order, 1], block[order, 3], "--", color=color)
    ax.set_xlabel("probe angle")
    ax.set_ylabel("deviation")
    ax.legend(fontsize=7)
    return RenderResult(1, table.shape[0], spec.output_image)


def _render_fig2(table: np.ndarray, spec: FigureSpec, ax) -> RenderResult:
    zs = np.unique(table[:, 0])
    ts = np.unique(table[:, 1])
    if len(zs) * len(ts) != table.shape[0]:
        raise SchemaError("figure 2 rows do not form a complete (z, omega_t) grid")
    grid = np.full((len(zs), len(ts)), np.nan)
    z_index = {z: i for i, z in enumerate(zs)}
    t_index = {t: j for j, t in enumerate(ts)}
    for row in table:
        grid[z_index[row[0]], t_index[row[1]]] = row[2]
    mesh = ax.imshow(
        grid,
        origin="lower",
        aspect="auto",
        extent=(ts[0], ts[-1], zs[0], zs[-1]),
        cmap="RdBu_r",
        vmin=-1.0,
        vmax=1.0,
    )
    ax.figure.colorbar(mesh, ax=ax, label="Re F")
    ax.set_xlabel("omega t")
    ax.set_ylabel("branch overlap z")
    return RenderResult(2, table.shape[0], spec.output_image)


def _render_fig3(table: np.ndarray, spec: FigureSpec, ax) -> RenderResult:
    order = np.argsort(table[:, 0])
    z = table[order, 0]
    s_solid = table[order, 1]
    s_dashed = table[order, 2]
    ax.plot(z, s_solid, "-", color="tab:blue", label=spec.solid_label)
    ax.plot(z, s_dashed, "--", color="tab:red", label=spec.dashed_label)
    crossings = _crossings(z, s_dashed - s_solid)
    for zc in crossings:
        sc = float(np.interp(zc, z, s_solid))
        ax.plot([zc], [sc], "o", color="black", markersize=5, zorder=5)
        ax.annotate(f"z = {zc:.4f}", (zc, sc), textcoords="offset points", xytext=(6, 6))
    ax.set_xlabel("branch overlap z")
    ax.set_ylabel("entanglement entropy (nats)")
    ax.legend()
    return RenderResult(3, table.shape[0], spec.output_image, crossings)


def render(spec: FigureSpec) -> RenderResult:
    """Validate the CSV, draw the figure, and write the image file."""
    table = load_table(spec.input_csv, spec.figure_id)
    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=130)
    try:
        if spec.figure_id == 1:
            result = _render_fig1(table, spec, ax)
        elif spec.figure_id == 2:
            result = _render_fig2(table, spec, ax)
        else:
            result = _render_fig3(table, spec, ax)
        fig.tight_layout()
        fig.savefig(spec.output_image)
    finally:
        plt.close(fig)
    return result
