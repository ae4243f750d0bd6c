"""Bulk verification of the structural facts about h_t used by the threshold argument.

Each check is evaluated exactly over a finite range; a failure is recorded
with the integers that witness it and the run carries on.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable

from .calculus import (
    derivative_triple,
    display_decimal,
    hprime_approx,
    hprime_sign,
    hsecond_sign,
)
from .exact import Sign, sphere_sum
from .thresholds import dominance, find_a0, local_max_condition

__all__ = ["AppendixReport", "CheckResult", "CHECKS", "spot_values", "verify_appendix"]

CHECKS = (
    "binomial_identity",  # h_t(n) = -n on 0..t
    "positivity",  # f_t(n) > 0 for n >= t-1
    "unit_shift",  # f_t(n-1) <= f_t(n)
    "first_derivative_signs",  # h'(2t-2) < 0 < h'(2t)
    "convexity",  # (f')^2 - f f'' > 0 on x >= t
    "slope_below_one",  # f' > 0 on x >= t, hence h' < 1
    "single_minimum",  # integer minimum of h_t in [2t-2, 2t]
    "shift_dominance",  # f_t(2ta) < 2^a  =>  (a,t)-bound below (0,t)-bound
)

SHIFT_SAMPLES = 200


@dataclass
class CheckResult:
    check: str
    t: int
    passed: bool
    evaluated: int = 0
    witness: dict = field(default_factory=dict)


@dataclass
class AppendixReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "results": [asdict(r) for r in self.results],
        }


def _binomial_identity(t, x_max):
    for n in range(0, t + 1):
        f = sphere_sum(n, t)
        if f != 4**n:
            return CheckResult("binomial_identity", t, False, n + 1, {"n": n, "f": f})
    return CheckResult("binomial_identity", t, True, t + 1)


def _positivity(t, x_max):
    start = max(t - 1, 0)
    for n in range(start, x_max + 1):
        if sphere_sum(n, t) <= 0:
            return CheckResult("positivity", t, False, n - start, {"n": n})
    return CheckResult("positivity", t, True, max(0, x_max + 1 - start))


def _unit_shift(t, x_max):
    prev = sphere_sum(0, t)
    for n in range(1, x_max + 1):
        cur = sphere_sum(n, t)
        if prev > cur:
            return CheckResult("unit_shift", t, False, n, {"n": n, "f_prev": prev, "f": cur})
        prev = cur
    return CheckResult("unit_shift", t, True, x_max)


def _first_derivative_signs(t, x_max):
    lower = hprime_sign(t, 2 * t - 2)
    upper = hprime_sign(t, 2 * t)
    ok = lower.sign == Sign.NEGATIVE and upper.sign == Sign.POSITIVE
    return CheckResult(
        "first_derivative_signs",
        t,
        ok,
        2,
        {
            "sign_at_2t_minus_2": int(lower.sign),
            "sign_at_2t": int(upper.sign),
            "precision_bits": max(lower.precision_bits, upper.precision_bits),
        },
    )


def _convexity(t, x_max):
    for x in range(t, x_max + 1):
        s = hsecond_sign(t, x)
        if s != Sign.POSITIVE:
            tri = derivative_triple(t, x)
            return CheckResult(
                "convexity", t, False, x - t + 1,
                {"x": x, "f": str(tri.f), "f1": str(tri.f1), "f2": str(tri.f2)},
            )
    return CheckResult("convexity", t, True, max(0, x_max - t + 1))


def _slope_below_one(t, x_max):
    for x in range(t, x_max + 1):
        tri = derivative_triple(t, x)
        if not (tri.f1 > 0 and tri.f > 0):
            return CheckResult("slope_below_one", t, False, x - t + 1, {"x": x})
    return CheckResult("slope_below_one", t, True, max(0, x_max - t + 1))


def _single_minimum(t, x_max):
    # sign of h(n+1) - h(n) is the sign of 2 f(n) - f(n+1)
    upto = max(x_max, 2 * t + 1)
    f = [sphere_sum(n, t) for n in range(upto + 1)]
    steps = [(2 * f[n] > f[n + 1]) - (2 * f[n] < f[n + 1]) for n in range(upto)]
    turn = next((n for n, s in enumerate(steps) if s >= 0), None)
    ok = turn is not None and all(s >= 0 for s in steps[turn:])
    ok = ok and 2 * t - 2 <= turn <= 2 * t
    return CheckResult(
        "single_minimum", t, ok, upto + 1, {"argmin": turn, "window": [2 * t - 2, 2 * t]}
    )


def _shift_dominance(t, x_max):
    a0, _ = find_a0(t)
    evaluated = 0
    for a in range(1, a0 + 5):
        if not local_max_condition(a, t):
            continue
        top = max(x_max, 4 * t * a)
        step = max(1, top // SHIFT_SAMPLES)
        for n in range(1, top + 1, step):
            evaluated += 1
            if not dominance(a, t, n):
                return CheckResult("shift_dominance", t, False, evaluated, {"a": a, "n": n})
    return CheckResult("shift_dominance", t, True, evaluated)


_RUNNERS = {
    "binomial_identity": _binomial_identity,
    "positivity": _positivity,
    "unit_shift": _unit_shift,
    "first_derivative_signs": _first_derivative_signs,
    "convexity": _convexity,
    "slope_below_one": _slope_below_one,
    "single_minimum": _single_minimum,
    "shift_dominance": _shift_dominance,
}


def verify_appendix(
    t_values: Iterable[int], x_max: int, checks: Iterable[str] | None = None
) -> AppendixReport:
    """Run the selected checks for every t; results ordered by (t, check)."""
    selected = list(CHECKS if checks is None else checks)
    unknown = set(selected) - set(_RUNNERS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    report = AppendixReport()
    for t in t_values:
        if t < 1:
            raise ValueError("t must be positive")
        for name in CHECKS:
            if name in selected:
                report.results.append(_RUNNERS[name](t, x_max))
    return report


def spot_values() -> dict:
    """The two derivative values quoted for t = 1, 2, with certified signs."""
    out = {}
    for key, (t, x) in {"hprime_1_at_0": (1, 0), "hprime_2_at_2": (2, 2)}.items():
        out[key] = {
            "t": t,
            "x": x,
            "sign": int(hprime_sign(t, x).sign),
            "approx": display_decimal(hprime_approx(t, x)),
        }
    return out
