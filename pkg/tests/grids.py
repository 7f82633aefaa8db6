"""Interior parameter grids shared by several test modules."""

from __future__ import annotations

import math

import numpy as np

from sphervol.antiprism import AntiprismSpec, c_lower_bound, c_upper_bound

FRACTIONS = np.linspace(0.05, 0.95, 10)


def a_upper(n: int) -> float:
    # m3 > 0 needs a < 2 pi / n; n = 2 is only limited by a < pi.
    return min(2.0 * math.pi / n, math.pi)


def interior_grid(n: int, fractions=FRACTIONS) -> list[AntiprismSpec]:
    """Specs strictly inside the existence region: a spans (0, a_max), c spans (c0, c_max)."""
    out = []
    for fa in fractions:
        a = fa * a_upper(n)
        lo, hi = c_lower_bound(n, a), min(c_upper_bound(n, a), math.pi)
        for fc in fractions:
            out.append(AntiprismSpec(n, a, lo + fc * (hi - lo)))
    return out


INTERIOR_SPECS = [
    AntiprismSpec(2, 1.0, 1.2),
    AntiprismSpec(3, 0.5, 0.6),
    AntiprismSpec(4, 0.6, 0.9),
    AntiprismSpec(5, 0.7, 0.8),
    AntiprismSpec(8, 0.3, 0.5),
]
