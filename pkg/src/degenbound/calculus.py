"""Exact calculus on ``f_t(x) = sum_i 3^i C(x, i)`` and the Hamming function h_t.

``h_t(x) = x - log2 f_t(x)`` for ``x >= 0`` and ``x`` otherwise.  Its
derivatives are

    h'  = 1 - f' / (ln2 * f)
    h'' = ((f')^2 - f f'') / (ln2 * f^2)

so the sign of ``h'`` is a certified ln 2 comparison and the sign of ``h''``
is purely rational.  ``f_t`` is expanded into a polynomial with rational
coefficients, which has no poles (unlike the harmonic-sum form of the
derivative of ``C(x, i)``).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from math import factorial

from .exact import (
    CertifiedSign,
    Sign,
    ln2_enclosure,
    sign_of_q_minus_r_ln2,
    sphere_sum,
)

__all__ = [
    "DerivativeTriple",
    "HValue",
    "binomial_poly",
    "derivative_triple",
    "display_decimal",
    "f_poly",
    "fprime_harmonic",
    "h_value_floor",
    "hprime_approx",
    "hprime_sign",
    "hsecond_sign",
    "poly_eval",
]


def poly_eval(coeffs, x):
    """Horner evaluation; ``coeffs[j]`` multiplies ``x**j``."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_mul_linear(coeffs: list[Fraction], root: int) -> list[Fraction]:
    # coeffs * (x - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        out[j + 1] += c
        out[j] -= root * c
    return out


def _poly_deriv(coeffs):
    return [j * c for j, c in enumerate(coeffs)][1:] or [Fraction(0)]


@functools.lru_cache(maxsize=None)
def binomial_poly(i: int) -> tuple[Fraction, ...]:
    """Coefficients of ``C(x, i) = x (x-1) ... (x-i+1) / i!``."""
    coeffs = [Fraction(1)]
    for r in range(i):
        coeffs = _poly_mul_linear(coeffs, r)
    return tuple(c / factorial(i) for c in coeffs)


@functools.lru_cache(maxsize=None)
def f_poly(t: int) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Coefficient tuples of ``f_t``, ``f_t'`` and ``f_t''``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    coeffs = [Fraction(0)] * (t + 1)
    for i in range(t + 1):
        for j, c in enumerate(binomial_poly(i)):
            coeffs[j] += 3**i * c
    d1 = _poly_deriv(coeffs)
    d2 = _poly_deriv(d1)
    return tuple(coeffs), tuple(d1), tuple(d2)


@dataclass(frozen=True)
class DerivativeTriple:
    f: Fraction
    f1: Fraction
    f2: Fraction


def derivative_triple(t: int, x) -> DerivativeTriple:
    x = Fraction(x)
    p, d1, d2 = f_poly(t)
    return DerivativeTriple(poly_eval(p, x), poly_eval(d1, x), poly_eval(d2, x))


def fprime_harmonic(t: int, x) -> Fraction:
    """``f_t'(x)`` in product-sum form; only defined off the integers 0..t-1."""
    x = Fraction(x)
    total = Fraction(0)
    for i in range(1, t + 1):
        c = poly_eval(binomial_poly(i), x)
        total += 3**i * c * sum(Fraction(1) / (x - k) for k in range(i))
    return total


@dataclass(frozen=True)
class HValue:
    """``h_t(n)`` without floats.

    ``exact`` is set when ``h_t(n)`` is an integer known in closed form (n < 0,
    or 0 <= n <= t where ``f_t(n) = 4^n``).  Otherwise ``h_t(n) = n - log2(f)``
    and consumers compare via the pair ``(n, f)``.
    """

    n: int
    f: int | None = None
    exact: int | None = None


def h_value_floor(t: int, n: int) -> HValue:
    if n < 0:
        return HValue(n=n, exact=n)
    if n <= t:
        return HValue(n=n, f=4**n, exact=-n)
    return HValue(n=n, f=sphere_sum(n, t))


def hprime_sign(t: int, x) -> CertifiedSign:
    """Certified sign of ``h_t'(x)``, i.e. of ``ln2 * f - f'``."""
    x = Fraction(x)
    if t >= 1 and x < t - 1:
        raise ValueError(f"h_{t}' sign requested outside x >= t-1 (x={x})")
    tri = derivative_triple(t, x)
    if tri.f <= 0:
        raise ValueError(f"f_{t}({x}) is not positive")
    cs = sign_of_q_minus_r_ln2(tri.f1, tri.f)
    return CertifiedSign(-cs.sign, cs.precision_bits)


def hprime_approx(t: int, x, bits: int = 128) -> Fraction:
    """Display-only value of ``h_t'(x)`` to about ``bits`` bits; never used for decisions."""
    lo, hi = ln2_enclosure(bits)
    ln2 = Fraction(lo + hi, 2 << bits)
    tri = derivative_triple(t, x)
    return 1 - tri.f1 / (ln2 * tri.f)


def display_decimal(value: Fraction, places: int = 3) -> str:
    """Round half-even to ``places`` decimals for human-facing output."""
    q = Decimal(1).scaleb(-places)
    exact = Decimal(value.numerator) / Decimal(value.denominator)
    return str(exact.quantize(q, rounding=ROUND_HALF_EVEN))


def hsecond_sign(t: int, x) -> Sign:
    """Sign of ``h_t''(x)`` on ``x >= t``, via ``(f')^2 - f f''``."""
    x = Fraction(x)
    if x < t:
        raise ValueError(f"h_{t}'' sign requested outside x >= t (x={x})")
    tri = derivative_triple(t, x)
    return Sign.of(tri.f1 * tri.f1 - tri.f * tri.f2)
