"""Check a concrete stabilizer code against every applicable bound.

The bounds are theorems about all valid codes, so on a correctly analyzed
code every verdict must hold; a failure means a bug or an invalid input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (
    BoundId,
    BoundVerdict,
    CodeParams,
    DegeneracyProfile,
    prior_bound_holds,
    singleton_max_k,
    verdict_from_max_k,
    ell_t_bound_max_k,
    lemma1_max_k,
    qhamming_max_k,
)
from .exact import sphere_sum
from .stabilizer import CodeAnalysis, StabilizerCode, analyze
from .thresholds import reference_table

__all__ = ["AuditReport", "audit", "bound_verdicts"]


def _cleared(bound_id: BoundId, params: CodeParams, max_k, f_arg: int | None, ell: int,
             note: str = "") -> BoundVerdict:
    witness = {}
    if f_arg is not None and f_arg >= 0:
        lhs = sphere_sum(f_arg, params.t) << params.k
        rhs = 1 << (params.n - ell)
        witness = {"lhs": lhs, "rhs": rhs, "equality": lhs == rhs}
    return verdict_from_max_k(bound_id, params.k, max_k, witness, note)


def degenerate_bound_applies(params: CodeParams, ell: int) -> tuple[bool, str]:
    """Whether the (1,t)-bound is established at these parameters."""
    t = params.t
    if t < 1 or ell < 1:
        return False, "needs t >= 1 and a stabilizer generator of weight <= 2t"
    if t == 1:
        return True, "holds for every length at t = 1"
    row = reference_table().get(t)
    if row is not None and params.n >= row.N_t:
        return True, f"n >= N({t}) = {row.N_t}"
    return False, f"only established for n >= N({t})"


def bound_verdicts(params: CodeParams, profile: DegeneracyProfile | None = None,
                   assume_degenerate: bool = False) -> list[BoundVerdict]:
    """Every bound applicable to ``params`` (and ``profile``, when known)."""
    n, k, d, t = params.n, params.k, params.d, params.t
    out = [
        _cleared(BoundId.QUANTUM_HAMMING, params, qhamming_max_k(n, t), n, 0),
        verdict_from_max_k(
            BoundId.SINGLETON, k, singleton_max_k(n, d),
            {"lhs": k, "rhs": n - 2 * d + 2},
        ),
    ]
    if profile is not None:
        profile.validate(t)
        out.append(_cleared(
            BoundId.LEMMA1, params, lemma1_max_k(n, t, profile),
            n - profile.sigma if profile.sigma <= n else None, profile.ell,
            note="sigma > n branch: k <= n - ell" if profile.sigma > n else "",
        ))
        sigma_w = 2 * t * profile.ell
        out.append(_cleared(
            BoundId.ELL_T, params, ell_t_bound_max_k(n, t, profile.ell),
            n - sigma_w if sigma_w <= n else None, profile.ell,
        ))
    ell = profile.ell if profile is not None else (1 if assume_degenerate else 0)
    applies, why = degenerate_bound_applies(params, ell)
    if applies:
        out.append(_cleared(
            BoundId.DEGENERATE, params, ell_t_bound_max_k(n, t, 1), n - 2 * t, 1, why,
        ))
    if t == 1 and ell >= 1:
        out.append(prior_bound_holds(n, k))
    return out


@dataclass
class AuditReport:
    analysis: CodeAnalysis
    verdicts: list[BoundVerdict] = field(default_factory=list)
    skipped: dict[str, str] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def verdict(self, bound_id: BoundId) -> BoundVerdict | None:
        return next((v for v in self.verdicts if v.bound_id == bound_id), None)

    def to_dict(self) -> dict:
        return {
            "analysis": self.analysis.to_dict(),
            "all_hold": self.all_hold,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "skipped": self.skipped,
        }


def audit(code: StabilizerCode, analysis: CodeAnalysis | None = None) -> AuditReport:
    analysis = analysis or analyze(code)
    params = CodeParams(analysis.n, analysis.k, analysis.d)
    verdicts = bound_verdicts(params, analysis.profile)
    present = {v.bound_id for v in verdicts}
    skipped = {}
    if BoundId.DEGENERATE not in present:
        skipped[BoundId.DEGENERATE.value] = degenerate_bound_applies(
            params, analysis.profile.ell)[1]
    if BoundId.PRIOR_DIST3 not in present:
        skipped[BoundId.PRIOR_DIST3.value] = "distance-3 degenerate codes only"
    return AuditReport(analysis, verdicts, skipped)
