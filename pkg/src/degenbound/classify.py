"""Which optimal distance-3 lengths may belong to degenerate stabilizer codes.

The optimal ``k`` for ``n = 5..25`` comes from the known classification of
optimal distance-3 stabilizer codes; it is embedded, not recomputed, because
the Hamming bound is not tight everywhere (n = 10 allows 5, the optimum is 4).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import degenerate_bound_max_k, qhamming_max_k

__all__ = [
    "OPTIMAL_K",
    "CrossCheckReport",
    "LengthFamily",
    "corollary_lengths",
    "cross_check",
    "degenerate_allowed",
    "length_families",
]

OPTIMAL_K: dict[int, int] = {
    5: 1, 6: 1, 7: 1, 8: 3, 9: 3, 10: 4, 11: 5, 12: 6, 13: 7, 14: 8, 15: 9,
    16: 10, 17: 11, 18: 11, 19: 12, 20: 13, 21: 15, 22: 15, 23: 16, 24: 17,
    25: 18,
}

FIRST_OFFSETS = (-1, 1, 2, 3, 4)  # 8 f_m + {+-1, 2, 3, 4}
SECOND_OFFSETS = (-1, 1, -2, 2, -3)  # f_{m+2} - {+-1, +-2, 3}


def perfect_length(m: int) -> int:
    return (4**m - 1) // 3


@dataclass(frozen=True)
class LengthFamily:
    m: int

    @property
    def f_m(self) -> int:
        return perfect_length(self.m)

    @property
    def first(self) -> frozenset[int]:
        return frozenset(8 * self.f_m + o for o in FIRST_OFFSETS)

    @property
    def second(self) -> frozenset[int]:
        return frozenset(perfect_length(self.m + 2) + o for o in SECOND_OFFSETS)

    @property
    def members(self) -> frozenset[int]:
        return self.first | self.second


def length_families(m_max: int) -> list[LengthFamily]:
    return [LengthFamily(m) for m in range(1, m_max + 1)]


def corollary_lengths(m_max: int) -> list[int]:
    out: set[int] = set()
    for fam in length_families(m_max):
        out |= fam.members
    return sorted(out)


def degenerate_allowed(n: int, optimal_k: int | None = None) -> bool:
    """True iff the distance-3 degenerate bound admits the optimal k at length n."""
    if optimal_k is None:
        if n not in OPTIMAL_K:
            raise KeyError(f"no embedded optimal k for n={n}; pass optimal_k")
        optimal_k = OPTIMAL_K[n]
    max_k = degenerate_bound_max_k(n, 1)
    return max_k is not None and optimal_k <= max_k


@dataclass
class CrossCheckReport:
    n_range: tuple[int, int]
    m_max: int
    by_bound: list[int] = field(default_factory=list)
    by_families: list[int] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "m_max": self.m_max,
            "by_bound": self.by_bound,
            "by_families": self.by_families,
            "agree": self.agree,
            "discrepancies": self.discrepancies,
        }


def cross_check(m_max: int, n_lo: int, n_hi: int,
                optimal_k: dict[int, int] | None = None) -> CrossCheckReport:
    """Compare the direct bound classification with the closed-form length families."""
    table = OPTIMAL_K if optimal_k is None else optimal_k
    report = CrossCheckReport((n_lo, n_hi), m_max)
    ns = [n for n in range(n_lo, n_hi + 1) if n in table]
    report.by_bound = [n for n in ns if degenerate_allowed(n, table[n])]
    fam = set(corollary_lengths(m_max))
    report.by_families = [n for n in ns if n in fam]
    for n in sorted(set(report.by_bound) ^ set(report.by_families)):
        report.discrepancies.append({
            "n": n,
            "optimal_k": table[n],
            "degenerate_bound_max_k": degenerate_bound_max_k(n, 1),
            "qhamming_max_k": qhamming_max_k(n, 1),
            "allowed_by_bound": n in report.by_bound,
            "in_families": n in fam,
        })
    return report
