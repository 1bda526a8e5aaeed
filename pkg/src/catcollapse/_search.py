"""Scalar maximization: coarse grid scan followed by golden-section polish."""

from __future__ import annotations

import math
from typing import Callable

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def maximize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    coarse: int = 721,
    xtol: float = 1e-8,
) -> tuple[float, float]:
    """Return (x*, f(x*)) maximizing ``f`` on the half-open interval [lo, hi).

    The coarse grid picks the best basin; grid ties (flat plateaus) are
    broken toward the smallest |x| so results are deterministic.  A
    golden-section search then narrows the bracket to width ``xtol``.
    Intended for smooth periodic objectives whose maxima are wider than
    one grid step.
    """
    if coarse < 3:
        raise ValueError("coarse grid needs at least 3 points")
    step = (hi - lo) / coarse
    xs = [lo + k * step for k in range(coarse)]
    vals = [f(x) for x in xs]
    best = max(vals)
    candidates = [x for x, v in zip(xs, vals) if best - v <= 1e-12 * max(1.0, abs(best))]
    x0 = min(candidates, key=abs)

    a, b = x0 - step, x0 + step
    while b - a > xtol:
        c = b - _INV_GOLDEN * (b - a)
        d = a + _INV_GOLDEN * (b - a)
        if f(c) < f(d):
            a = c
        else:
            b = d
    x_star = 0.5 * (a + b)
    return x_star, f(x_star)
