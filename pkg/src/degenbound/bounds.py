"""Hamming-like bounds on stabilizer code parameters, decided exactly.

Every "k <= n - l - log2(f)" style bound is turned into the integer test
``2^(k+l) * f <= 2^n`` so the largest admissible ``k`` and any saturation are
found without logarithms.  A bound that admits no ``k >= 0`` is reported as
``None``.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field

from .exact import cmp_pow2, sphere_sum

__all__ = [
    "BoundId",
    "BoundVerdict",
    "CodeParams",
    "DegeneracyProfile",
    "classical_hamming_holds",
    "degenerate_bound_max_k",
    "ell_t_bound_max_k",
    "lemma1_max_k",
    "prior_bound_holds",
    "qhamming_max_k",
    "shifted_form_max_k",
    "singleton_max_k",
    "verdict_from_max_k",
]


class BoundId(str, enum.Enum):
    QUANTUM_HAMMING = "quantum_hamming"
    CLASSICAL_HAMMING = "classical_hamming"
    SINGLETON = "quantum_singleton"
    LEMMA1 = "lemma1_ell_sigma"
    ELL_T = "ell_t_bound"
    DEGENERATE = "degenerate_bound"
    PRIOR_DIST3 = "prior_distance3_bound"


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")

    @property
    def t(self) -> int:
        return (self.d - 1) // 2


@dataclass(frozen=True)
class DegeneracyProfile:
    """``ell`` independent stabilizer generators of weight <= 2t, total weight ``sigma``."""

    ell: int = 0
    sigma: int = 0

    def validate(self, t: int) -> None:
        if self.ell < 0:
            raise ValueError("ell must be nonnegative")
        if self.ell == 0:
            if self.sigma != 0:
                raise ValueError("sigma must be 0 when ell is 0")
            return
        if not self.ell <= self.sigma <= 2 * t * self.ell:
            raise ValueError(
                f"need ell <= sigma <= 2t*ell, got ell={self.ell}, "
                f"sigma={self.sigma}, t={t}"
            )


@dataclass
class BoundVerdict:
    bound_id: BoundId
    k: int
    max_k: int | None
    holds: bool
    saturated: bool
    witness: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        out = asdict(self)
        out["bound_id"] = self.bound_id.value
        # big integers stay exact in JSON
        return out


def _largest_k(weight: int, n_bits: int) -> int | None:
    """Largest ``k >= 0`` with ``2^k * weight <= 2^n_bits``, or None."""
    if n_bits < 0 or cmp_pow2(weight, n_bits) > 0:
        return None
    # weight <= 2^n_bits, so k = n_bits - ceil(log2(weight))
    k = n_bits - (weight - 1).bit_length()
    return k


def qhamming_max_k(n: int, t: int) -> int | None:
    if n < 1 or t < 0:
        raise ValueError("need n >= 1 and t >= 0")
    return _largest_k(sphere_sum(n, t), n)


def classical_hamming_holds(n: int, K: int, d: int, q: int = 2) -> BoundVerdict:
    """``K * sum_{i<=t} (q-1)^i C(n,i) <= q^n``; ``max_k`` counts codewords here."""
    if q < 2 or n < 1 or K < 1 or d < 1:
        raise ValueError("need q >= 2, n >= 1, K >= 1, d >= 1")
    from math import comb

    t = (d - 1) // 2
    ball = sum((q - 1) ** i * comb(n, i) for i in range(t + 1))
    space = q**n
    lhs = K * ball
    return BoundVerdict(
        bound_id=BoundId.CLASSICAL_HAMMING,
        k=K,
        max_k=space // ball,
        holds=lhs <= space,
        saturated=lhs == space,
        witness={"lhs": lhs, "rhs": space},
    )


def lemma1_max_k(n: int, t: int, profile: DegeneracyProfile) -> int | None:
    profile.validate(t)
    if profile.sigma > n:
        k = n - profile.ell
        return k if k >= 0 else None
    return _largest_k(sphere_sum(n - profile.sigma, t), n - profile.ell)


def _h_floor_shifted(m: int, t: int, lift: int) -> int | None:
    """floor(h_t(m) + lift) for m >= 0, exactly."""
    # h_t(m) + lift = (m + lift) - log2 f_t(m)
    return _largest_k(sphere_sum(m, t), m + lift)


def shifted_form_max_k(n: int, t: int, profile: DegeneracyProfile) -> int | None:
    """Same bound as :func:`lemma1_max_k`, written as ``h_t(n - sigma) + sigma - ell``."""
    profile.validate(t)
    if profile.sigma > n:
        k = n - profile.ell
        return k if k >= 0 else None
    return _h_floor_shifted(n - profile.sigma, t, profile.sigma - profile.ell)


def ell_t_bound_max_k(n: int, t: int, ell: int) -> int | None:
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    sigma = 2 * t * ell
    if sigma > n:
        k = n - ell
        return k if k >= 0 else None
    return _largest_k(sphere_sum(n - sigma, t), n - ell)


def degenerate_bound_max_k(n: int, t: int) -> int | None:
    if n < 2 * t + 1:
        raise ValueError(f"degenerate bound needs n >= 2t+1, got n={n}, t={t}")
    return ell_t_bound_max_k(n, t, 1)


def prior_bound_holds(n: int, k: int) -> BoundVerdict:
    """Earlier distance-3 bound for degenerate codes: ``4n - k + 1 <= 2^(n-k)``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    lhs = 4 * n - k + 1
    max_k = None
    for kk in range(n, -1, -1):
        if cmp_pow2(4 * n - kk + 1, n - kk) <= 0:
            max_k = kk
            break
    c = cmp_pow2(lhs, n - k)
    return BoundVerdict(
        bound_id=BoundId.PRIOR_DIST3,
        k=k,
        max_k=max_k,
        holds=c <= 0,
        saturated=c == 0,
        witness={"lhs": lhs, "rhs": 1 << (n - k)},
    )


def singleton_max_k(n: int, d: int) -> int | None:
    """``n - 2d + 2``, or None when ``n < 2d - 2`` (no code)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n < 2 * d - 2:
        return None
    return n - 2 * d + 2


def verdict_from_max_k(
    bound_id: BoundId, k: int, max_k: int | None, witness: dict | None = None,
    note: str = "",
) -> BoundVerdict:
    holds = max_k is not None and k <= max_k
    return BoundVerdict(
        bound_id=bound_id,
        k=k,
        max_k=max_k,
        holds=holds,
        saturated=holds and k == max_k,
        witness=witness or {},
        note=note,
    )
