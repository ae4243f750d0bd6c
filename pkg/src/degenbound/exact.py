"""Exact integer/rational primitives and certified comparisons against ln 2.

Nothing in here touches floating point.  Every inequality in the rest of the
package that would naively involve ``log2`` is cleared into an integer
comparison, and the few places that genuinely need ln 2 (derivative signs of
the Hamming function) go through :func:`sign_of_q_minus_r_ln2`, which widens a
rigorous integer enclosure of ln 2 until the sign is decided.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = [
    "DEFAULT_PRECISION_CEILING",
    "CertifiedSign",
    "Sign",
    "UnresolvedSignError",
    "binom",
    "cmp_pow2",
    "ln2_enclosure",
    "sign_of_q_minus_r_ln2",
    "sphere_sum",
]

DEFAULT_PRECISION_CEILING = 4096
_START_BITS = 64


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "Sign":
        return cls((value > 0) - (value < 0))

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


@dataclass(frozen=True)
class CertifiedSign:
    """A sign that is mathematically guaranteed, with the ln 2 precision used."""

    sign: Sign
    precision_bits: int = 0


class UnresolvedSignError(ArithmeticError):
    """Raised when the precision ceiling is hit before a sign is decided."""


def binom(n: int, i: int) -> int:
    if n < 0 or i < 0:
        raise ValueError("binom expects nonnegative arguments")
    return comb(n, i)


def sphere_sum(n: int, t: int) -> int:
    """Return ``f_t(n) = sum_{i=0}^{t} 3^i C(n, i)``.

    This counts the Pauli errors of weight at most ``t`` on ``n`` qubits.
    """
    if n < 0:
        raise ValueError(f"sphere_sum needs n >= 0, got {n}")
    if t < 0:
        raise ValueError(f"sphere_sum needs t >= 0, got {t}")
    total = 0
    term = 1  # 3^i C(n, i), built incrementally
    for i in range(min(t, n) + 1):
        if i:
            term = term * 3 * (n - i + 1) // i
        total += term
    return total


def cmp_pow2(lhs: int, e: int) -> int:
    """Three-way compare ``lhs`` with ``2**e``; returns -1, 0 or 1."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if lhs <= 0:
        return -1
    bl = lhs.bit_length()
    # 2^(bl-1) <= lhs < 2^bl
    if bl <= e:
        return -1
    if bl > e + 1:
        return 1
    return 0 if lhs & (lhs - 1) == 0 else 1


@functools.lru_cache(maxsize=None)
def ln2_enclosure(bits: int) -> tuple[int, int]:
    """Integers ``(lo, hi)`` with ``lo / 2**bits <= ln 2 <= hi / 2**bits``.

    Uses ``ln 2 = 2 artanh(1/3) = sum_k 2 / ((2k+1) 3^(2k+1))``.  Each term is
    rounded down for ``lo`` and up for ``hi``; the truncated tail is bounded by
    ``2 / ((2N+1) 3^(2N+1)) * 9/8`` and added to ``hi``.
    """
    if bits < 1:
        raise ValueError("bits must be positive")
    guard = max(8, bits.bit_length() + 4)  # absorbs one unit of rounding per term
    scale = 1 << (bits + guard)
    lo = hi = 0
    k = 0
    while True:
        den = (2 * k + 1) * 3 ** (2 * k + 1)
        num = 2 * scale
        lo += num // den
        hi += -(-num // den)
        k += 1
        tail_den = (2 * k + 1) * 3 ** (2 * k + 1) * 8
        # ceil of the scaled tail bound
        tail = -(-(num * 9) // tail_den)
        if tail <= 1:
            hi += tail
            return lo >> guard, -(-hi >> guard)


def _interval_sign(q: Fraction, r: Fraction, bits: int) -> Sign | None:
    lo, hi = ln2_enclosure(bits)
    scale = 1 << bits
    if r < 0:
        q, r = -q, -r
        flip = True
    else:
        flip = False
    # q - r*ln2 lies in [q - r*hi/scale, q - r*lo/scale]
    upper = q * scale - r * lo
    lower = q * scale - r * hi
    if lower > 0:
        s = Sign.POSITIVE
    elif upper < 0:
        s = Sign.NEGATIVE
    else:
        return None
    return -s if flip else s


def sign_of_q_minus_r_ln2(
    q, r, *, ceiling: int = DEFAULT_PRECISION_CEILING
) -> CertifiedSign:
    """Certified sign of ``q - r * ln 2`` for rationals ``q`` and ``r``.

    For ``r != 0`` the value is never zero since ln 2 is irrational, so the
    precision-doubling loop terminates; ``ceiling`` guards absurd inputs.
    """
    q, r = Fraction(q), Fraction(r)
    if r == 0:
        return CertifiedSign(Sign.of(q), 0)
    bits = _START_BITS
    while bits <= ceiling:
        s = _interval_sign(q, r, bits)
        if s is not None:
            return CertifiedSign(s, bits)
        bits *= 2
    raise UnresolvedSignError(
        f"sign of {q} - {r}*ln2 unresolved at {ceiling} bits"
    )
