"""Threshold lengths N(l, t) after which the (l, t)-bound dominates all (l', t)-bounds.

The construction: find the first shift index ``a0`` from which every
``(a, t)``-bound peaks below the quantum Hamming bound (``f_t(2ta) < 2^a``),
find for each smaller ``a`` the crossing length ``n_a`` after which the
``(a, t)``-bound stays below, and take ``N(0, t) = max(n_1, ..., 2t*a0)``.
"""

from __future__ import annotations

import functools
import os
from dataclasses import asdict, dataclass, field
from math import factorial

from .exact import Sign, cmp_pow2, sign_of_q_minus_r_ln2, sphere_sum

__all__ = [
    "HORIZON_ENV",
    "HorizonTooSmallError",
    "ReferenceRow",
    "TailCertificate",
    "ThresholdReport",
    "compute_N",
    "default_horizon",
    "dominance",
    "find_a0",
    "find_n_a",
    "local_max_condition",
    "reference_table",
    "threshold_report",
]

HORIZON_ENV = "DEGENBOUND_HORIZON"
DEFAULT_WINDOW = 16


class HorizonTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class ReferenceRow:
    t: int
    rains_bound: int
    M_t: int
    N_t: int


_TABLE1 = (
    (1, 5, 5, 12),
    (2, 11, 9, 60),
    (3, 17, 14, 150),
    (4, 23, 20, 288),
    (5, 29, 25, 470),
    (6, 35, 30, 696),
    (7, 41, 35, 980),
)


def reference_table() -> dict[int, ReferenceRow]:
    """Published constants for t = 1..7: Rains' 3d-4, Li-Xing's M(t), and N(t)."""
    return {row[0]: ReferenceRow(*row) for row in _TABLE1}


@functools.lru_cache(maxsize=64)
def _f_table(t: int, upto: int) -> tuple[int, ...]:
    return tuple(sphere_sum(n, t) for n in range(upto + 1))


def _f(t: int, n: int, table: tuple[int, ...] | None = None) -> int:
    if table is not None and n < len(table):
        return table[n]
    return sphere_sum(n, t)


def local_max_condition(a: int, t: int) -> bool:
    """True iff the (a, t)-bound's peak at n = 2ta lies strictly below the Hamming bound."""
    if a < 1 or t < 1:
        raise ValueError("need a >= 1 and t >= 1")
    return cmp_pow2(sphere_sum(2 * t * a, t), a) < 0


def dominance(a: int, t: int, n: int, table: tuple[int, ...] | None = None) -> bool:
    """True iff the (a, t)-bound is <= the (0, t)-bound at length n."""
    if a < 1 or t < 1 or n < 1:
        raise ValueError("need a, t, n >= 1")
    fn = _f(t, n, table)
    shift = 2 * t * a
    if n < shift:
        return cmp_pow2(fn, a) <= 0
    return fn <= _f(t, n - shift, table) << a


@dataclass
class TailCertificate:
    """Finite certificate that ``f_t(2ta) < 2^a`` for every ``a >= a0``.

    Direct checks cover ``[a0, window_end]``.  Past the window, the terms of
    ``f_t`` increase for x >= 2t so ``f_t(2ta) <= (t+1)(6ta)^t / t!``; the
    certificate records that ``2^a`` beats this envelope at ``window_end`` and
    that the log-defect has positive slope there (``a ln 2 > t``).
    """

    window_start: int
    window_end: int
    envelope_holds_at_end: bool
    slope_positive: bool
    slope_precision_bits: int

    @property
    def valid(self) -> bool:
        return self.envelope_holds_at_end and self.slope_positive


def _envelope_ok(a: int, t: int) -> bool:
    # 2^a > (t+1) (6ta)^t / t!
    return (1 << a) * factorial(t) > (t + 1) * (6 * t * a) ** t


def _slope_sign(a: int, t: int):
    # sign of a ln2 - t  ==  -(t - a ln2)
    cs = sign_of_q_minus_r_ln2(t, a)
    return -cs.sign, cs.precision_bits


def find_a0(t: int, window: int = DEFAULT_WINDOW) -> tuple[int, TailCertificate]:
    """Smallest ``a0`` with ``f_t(2ta) < 2^a`` for all ``a >= a0``, with its certificate."""
    if t < 1:
        raise ValueError("find_a0 needs t >= 1")
    end = max(window, 2)
    while True:
        if _envelope_ok(end, t):
            slope, bits = _slope_sign(end, t)
            if slope == Sign.POSITIVE:
                break
        end *= 2
        if end > 1 << 20:
            raise RuntimeError(f"could not certify the tail for t={t}")
    last_fail = 0
    for a in range(1, end + 1):
        if not local_max_condition(a, t):
            last_fail = a
    a0 = last_fail + 1
    # keep at least `window` directly checked values past a0
    while end < a0 + window:
        end += 1
        if not local_max_condition(end, t):
            raise AssertionError("envelope certificate contradicted")
    slope, bits = _slope_sign(end, t)
    cert = TailCertificate(
        window_start=a0,
        window_end=end,
        envelope_holds_at_end=_envelope_ok(end, t),
        slope_positive=slope == Sign.POSITIVE,
        slope_precision_bits=bits,
    )
    if not cert.valid:
        raise RuntimeError(f"tail certificate failed for t={t}: {cert}")
    return a0, cert


def default_horizon(t: int, a0: int) -> int:
    env = os.environ.get(HORIZON_ENV)
    if env:
        return int(env)
    return max(500, 8 * t * a0)


@dataclass
class CrossingPoint:
    a: int
    n_a: int
    # lengths below n_a where dominance happens to hold already
    early_agreements: list[int] = field(default_factory=list)


def find_n_a(a: int, t: int, horizon: int) -> CrossingPoint:
    """Smallest n with dominance(a, t, n') for every n' in [n, horizon]."""
    if t < 1:
        raise ValueError("find_n_a needs t >= 1")
    if a < 1:
        raise ValueError("find_n_a needs a >= 1")
    table = _f_table(t, horizon)
    if not dominance(a, t, horizon, table):
        raise HorizonTooSmallError(
            f"(a={a}, t={t})-bound still above the Hamming bound at "
            f"horizon {horizon}; raise the horizon"
        )
    n = horizon
    while n > 1 and dominance(a, t, n - 1, table):
        n -= 1
    early = [m for m in range(1, n) if dominance(a, t, m, table)]
    return CrossingPoint(a=a, n_a=n, early_agreements=early)


@dataclass
class ThresholdReport:
    t: int
    a0: int
    crossing_points: list[CrossingPoint]
    N0: int
    conjecture_holds: bool
    tail_certificate: TailCertificate
    scan_horizon: int

    def N(self, ell: int) -> int:
        return self.N0 + 2 * self.t * ell

    def to_dict(self) -> dict:
        out = asdict(self)
        out["tail_certificate"]["valid"] = self.tail_certificate.valid
        out["N1"] = self.N(1)
        return out


def threshold_report(t: int, horizon: int | None = None) -> ThresholdReport:
    a0, cert = find_a0(t)
    if horizon is None:
        horizon = default_horizon(t, a0)
    if horizon < 2 * t * a0:
        raise HorizonTooSmallError(
            f"horizon {horizon} is below 2t*a0 = {2 * t * a0}; raise the horizon"
        )
    points = [find_n_a(a, t, horizon) for a in range(1, a0)]
    N0 = max([p.n_a for p in points] + [2 * t * a0])
    return ThresholdReport(
        t=t,
        a0=a0,
        crossing_points=points,
        N0=N0,
        conjecture_holds=N0 == 2 * t * a0,
        tail_certificate=cert,
        scan_horizon=horizon,
    )


def compute_N(t: int, ell: int, horizon: int | None = None) -> int:
    """N(ell, t) = N(0, t) + 2t*ell.  N(1, t) is the N(t) of the degenerate bound."""
    if t < 1:
        raise ValueError("compute_N needs t >= 1")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    return threshold_report(t, horizon).N(ell)
