"""Plot data for the bound curves and the distance-3 classification.

Curve values are log2 renderings and carry a display-only precision note; the
``*_floor`` columns and the point labels come from exact comparisons.
"""

from __future__ import annotations

import math

from .bounds import DegeneracyProfile, lemma1_max_k, qhamming_max_k
from .classify import OPTIMAL_K, degenerate_allowed
from .exact import sphere_sum

__all__ = ["PRECISION_NOTE", "figure_data"]

PRECISION_NOTE = "curve values are float64 log2 renderings for display only"


def shifted_curve(n: int, t: int, ell: int, sigma: int) -> float:
    """Real-valued bound ``n - ell - log2 f_t(n - sigma)``, or ``n - ell`` when sigma > n."""
    if sigma > n:
        return float(n - ell)
    return n - ell - math.log2(sphere_sum(n - sigma, t))


def _curves(profiles, n_values, t=1):
    columns = ["n"]
    for ell, sigma in profiles:
        columns += [f"bound_l{ell}_s{sigma}", f"bound_l{ell}_s{sigma}_floor"]
    rows = []
    for n in n_values:
        row = [n]
        for ell, sigma in profiles:
            row.append(round(shifted_curve(n, t, ell, sigma), 6))
            mk = lemma1_max_k(n, t, DegeneracyProfile(ell, sigma)) if n >= 1 else None
            row.append(mk)
        rows.append(row)
    return columns, rows


def figure_data(which: int) -> dict:
    if which == 1:
        profiles = [(0, 0), (3, 6), (8, 14)]
        columns, rows = _curves(profiles, range(0, 27))
        return {"figure": 1, "t": 1, "columns": columns, "rows": rows,
                "note": PRECISION_NOTE}
    if which == 2:
        profiles = [(ell, 2 * ell) for ell in range(0, 7)]
        columns, rows = _curves(profiles, range(0, 17))
        return {"figure": 2, "t": 1, "columns": columns, "rows": rows,
                "note": PRECISION_NOTE}
    if which == 3:
        columns, rows = _curves([(0, 0), (1, 2)], range(3, 27))
        points = []
        for n, k in sorted(OPTIMAL_K.items()):
            points.append({
                "n": n,
                "k": k,
                "label": "red" if degenerate_allowed(n) else "black",
                "qhamming_max_k": qhamming_max_k(n, 1),
            })
        return {"figure": 3, "t": 1, "columns": columns, "rows": rows,
                "points": points, "note": PRECISION_NOTE}
    raise ValueError(f"unknown figure {which}")
