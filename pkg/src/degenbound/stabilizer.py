"""Stabilizer codes over Pauli strings: parsing, distance, degeneracy profile.

Pauli operators live in the symplectic picture as two ``n``-bit integers
``(x, z)``; phases are dropped since weights, commutation and group membership
don't depend on them.  Everything here is brute force with explicit size
guards -- fine for codes of a dozen or so qubits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .bounds import DegeneracyProfile

__all__ = [
    "CodeAnalysis",
    "CodeParseError",
    "DistanceNotFound",
    "GROUP_GUARD",
    "DISTANCE_GUARD",
    "PauliOperator",
    "StabilizerCode",
    "TooLargeError",
    "analyze",
    "degeneracy_profile",
    "distance",
    "extend_with_z",
    "group_elements",
    "group_min_weight",
    "low_weight_elements",
    "parse_code",
]

GROUP_GUARD = 26
DISTANCE_GUARD = 14

_LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_FROM_BITS = {v: k for k, v in _LETTERS.items()}


class CodeParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TooLargeError(ValueError):
    pass


class DistanceNotFound(Exception):
    """No logical operator of weight <= cap exists; ``lower_bound`` is cap + 1."""

    def __init__(self, cap: int):
        self.lower_bound = cap + 1
        super().__init__(f"d > {cap}")


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int
    z: int

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        x = z = 0
        for j, ch in enumerate(s):
            try:
                bx, bz = _LETTERS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r}") from None
            x |= bx << j
            z |= bz << j
        return cls(len(s), x, z)

    def __str__(self) -> str:
        return "".join(
            _FROM_BITS[((self.x >> j) & 1, (self.z >> j) & 1)] for j in range(self.n)
        )

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        return bin(self.x | self.z).count("1")

    @property
    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def commutes(self, other: "PauliOperator") -> bool:
        return symplectic(self.x, self.z, other.x, other.z) == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z)

    def packed(self) -> int:
        return self.x | (self.z << self.n)


def symplectic(x1: int, z1: int, x2: int, z2: int) -> int:
    return bin((x1 & z2) ^ (z1 & x2)).count("1") & 1


class _Span:
    """Incremental GF(2) row echelon form over packed integers, tracking combinations."""

    def __init__(self):
        self.rows: dict[int, tuple[int, int]] = {}  # pivot -> (vector, combo mask)

    def reduce(self, vec: int, combo: int = 0) -> tuple[int, int]:
        while vec:
            top = vec.bit_length() - 1
            hit = self.rows.get(top)
            if hit is None:
                break
            vec ^= hit[0]
            combo ^= hit[1]
        return vec, combo

    def add(self, vec: int, combo: int = 0) -> bool:
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return False
        self.rows[vec.bit_length() - 1] = (vec, combo)
        return True

    def contains(self, vec: int) -> bool:
        return self.reduce(vec)[0] == 0

    @property
    def rank(self) -> int:
        return len(self.rows)


@dataclass
class StabilizerCode:
    n: int
    generators: list[PauliOperator]
    _span: _Span = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if any(g.n != self.n for g in self.generators):
            raise ValueError("generator lengths must equal n")
        if len(self.generators) > self.n:
            raise ValueError("more generators than qubits")
        span = _Span()
        for g in self.generators:
            span.add(g.packed())
        if span.rank != len(self.generators):
            raise ValueError("generators are not independent")
        for g, h in itertools.combinations(self.generators, 2):
            if not g.commutes(h):
                raise ValueError("generators do not commute")
        self._span = span

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "StabilizerCode":
        return parse_code("\n".join(rows))

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def k(self) -> int:
        return self.n - self.m

    def in_stabilizer(self, p: PauliOperator) -> bool:
        return self._span.contains(p.packed())

    def in_normalizer(self, p: PauliOperator) -> bool:
        return all(p.commutes(g) for g in self.generators)


def _clean_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0] in "+-":
            line = line[1:].strip()
        yield lineno, line.replace(" ", "").upper()


def parse_code(text: str) -> StabilizerCode:
    """Parse one generator per line (letters IXYZ, optional sign, ``#`` comments)."""
    rows: list[tuple[int, PauliOperator]] = []
    for lineno, line in _clean_lines(text):
        bad = [ch for ch in line if ch not in _LETTERS]
        if bad:
            raise CodeParseError(f"invalid character {bad[0]!r}", lineno)
        op = PauliOperator.from_string(line)
        if rows and op.n != rows[0][1].n:
            raise CodeParseError(
                f"length {op.n} differs from first generator length {rows[0][1].n}",
                lineno,
            )
        rows.append((lineno, op))
    if not rows:
        raise CodeParseError("no generators found")
    n = rows[0][1].n
    if len(rows) > n:
        raise CodeParseError(f"{len(rows)} generators on {n} qubits cannot be independent")
    for (la, a), (lb, b) in itertools.combinations(rows, 2):
        if not a.commutes(b):
            raise CodeParseError(f"generator on line {la} anticommutes with line {lb}", lb)
    span = _Span()
    for idx, (lineno, op) in enumerate(rows):
        residue, combo = span.reduce(op.packed(), 1 << idx)
        if residue == 0:
            used = [rows[j][0] for j in range(idx) if (combo >> j) & 1]
            raise CodeParseError(
                f"generator is the product of generators on lines {used}", lineno
            )
        span.add(op.packed(), 1 << idx)
    return StabilizerCode(n, [op for _, op in rows])


def group_elements(code: StabilizerCode, *, guard: int = GROUP_GUARD) -> Iterator[PauliOperator]:
    """All 2^m stabilizer elements (identity first), in Gray-code order."""
    if code.m > guard:
        raise TooLargeError(f"2^{code.m} group elements exceeds the guard m <= {guard}")
    x = z = 0
    yield PauliOperator(code.n, 0, 0)
    for i in range(1, 1 << code.m):
        g = code.generators[(i & -i).bit_length() - 1]
        x ^= g.x
        z ^= g.z
        yield PauliOperator(code.n, x, z)


def group_min_weight(code: StabilizerCode, weight_cap: int | None = None, *,
                     guard: int = GROUP_GUARD) -> int | None:
    """Minimum weight of a non-identity stabilizer; None if none is <= weight_cap."""
    best = None
    for p in group_elements(code, guard=guard):
        if p.is_identity:
            continue
        w = p.weight
        if best is None or w < best:
            best = w
    if weight_cap is not None and best is not None and best > weight_cap:
        return None
    return best


def _paulis_of_weight(n: int, w: int) -> Iterator[PauliOperator]:
    for support in itertools.combinations(range(n), w):
        for letters in itertools.product(((1, 0), (0, 1), (1, 1)), repeat=w):
            x = z = 0
            for q, (bx, bz) in zip(support, letters):
                x |= bx << q
                z |= bz << q
            yield PauliOperator(n, x, z)


def distance(code: StabilizerCode, cap: int | None = None, *,
             guard: int = DISTANCE_GUARD) -> int:
    """Minimum weight of an element of N(S) \\ S, searching by ascending weight."""
    if code.n > guard:
        raise TooLargeError(f"distance search on n={code.n} exceeds the guard n <= {guard}")
    cap = code.n if cap is None else min(cap, code.n)
    for w in range(1, cap + 1):
        for p in _paulis_of_weight(code.n, w):
            if code.in_normalizer(p) and not code.in_stabilizer(p):
                return w
    raise DistanceNotFound(cap)


def degeneracy_profile(code: StabilizerCode, t: int, *,
                       guard: int = GROUP_GUARD) -> DegeneracyProfile:
    """Rank of the weight <= 2t stabilizers and the least total weight of a basis of them.

    Greedy selection in ascending weight is optimal since independent sets of
    vectors form a matroid.
    """
    if code.m > guard:
        raise TooLargeError(f"2^{code.m} group elements exceeds the guard m <= {guard}")
    low = sorted(low_weight_elements(code, t), key=lambda p: (p.weight, p.packed()))
    span = _Span()
    sigma = 0
    for p in low:
        if span.add(p.packed()):
            sigma += p.weight
    return DegeneracyProfile(ell=span.rank, sigma=sigma)


def low_weight_elements(code: StabilizerCode, t: int) -> list[PauliOperator]:
    """Non-identity stabilizer elements of weight <= 2t."""
    return [p for p in group_elements(code) if not p.is_identity and p.weight <= 2 * t]


def extend_with_z(code: StabilizerCode) -> StabilizerCode:
    """Append a qubit and the generator Z on it: [[n,k,d]] -> degenerate [[n+1,k,d]]."""
    n = code.n + 1
    gens = [PauliOperator(n, g.x, g.z) for g in code.generators]
    gens.append(PauliOperator(n, 0, 1 << code.n))
    return StabilizerCode(n, gens)


@dataclass
class CodeAnalysis:
    n: int
    k: int
    d: int
    t: int
    min_stabilizer_weight: int | None
    degenerate: bool
    profile: DegeneracyProfile

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "t": self.t,
            "min_stabilizer_weight": self.min_stabilizer_weight,
            "degenerate": self.degenerate,
            "profile": {"ell": self.profile.ell, "sigma": self.profile.sigma},
        }


def analyze(code: StabilizerCode, *, distance_guard: int = DISTANCE_GUARD,
            group_guard: int = GROUP_GUARD) -> CodeAnalysis:
    d = distance(code, guard=distance_guard)
    s_min = group_min_weight(code, guard=group_guard)
    t = (d - 1) // 2
    return CodeAnalysis(
        n=code.n,
        k=code.k,
        d=d,
        t=t,
        min_stabilizer_weight=s_min,
        degenerate=s_min is not None and s_min < d,
        profile=degeneracy_profile(code, t, guard=group_guard),
    )
