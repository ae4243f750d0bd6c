import itertools

import pytest
from hypothesis import given, strategies as st

from degenbound.audit import audit
from degenbound.bounds import BoundId, DegeneracyProfile
from degenbound.stabilizer import (
    CodeParseError,
    DistanceNotFound,
    PauliOperator,
    StabilizerCode,
    TooLargeError,
    analyze,
    degeneracy_profile,
    distance,
    extend_with_z,
    group_elements,
    group_min_weight,
    low_weight_elements,
    parse_code,
)

from conftest import FIXTURES


def load(name: str) -> StabilizerCode:
    return parse_code((FIXTURES / name).read_text())


@pytest.fixture(scope="module")
def five():
    return load("five_qubit.stab")


@pytest.fixture(scope="module")
def shor():
    return load("shor9.stab")


@pytest.fixture(scope="module")
def six():
    return load("six_one_three.stab")


class TestPauli:
    def test_roundtrip_and_weight(self):
        p = PauliOperator.from_string("XIYZ")
        assert str(p) == "XIYZ"
        assert p.weight == 3
        assert not p.is_identity
        assert PauliOperator.from_string("III").is_identity

    def test_commutation(self):
        x, z, y = (PauliOperator.from_string(s) for s in "XZY")
        assert not x.commutes(z) and not x.commutes(y)
        assert PauliOperator.from_string("XX").commutes(PauliOperator.from_string("ZZ"))

    @given(st.text("IXYZ", min_size=4, max_size=4), st.text("IXYZ", min_size=4, max_size=4))
    def test_commutation_symmetric(self, a, b):
        p, q = PauliOperator.from_string(a), PauliOperator.from_string(b)
        assert p.commutes(q) == q.commutes(p)
        assert p.commutes(p)


class TestParse:
    def test_five_qubit(self, five):
        assert (five.n, five.k, five.m) == (5, 1, 4)

    def test_two_qubit(self):
        code = parse_code("XX\nZZ")
        assert (code.n, code.k) == (2, 0)

    def test_signs_comments_blank_lines(self):
        code = parse_code("# header\n+XX\n\n-ZZ  # trailing\n")
        assert [str(g) for g in code.generators] == ["XX", "ZZ"]

    def test_dependent(self):
        with pytest.raises(CodeParseError, match="product of generators on lines \\[1\\]"):
            parse_code("XI\nXI")

    def test_dependent_combination_witness(self):
        with pytest.raises(CodeParseError) as exc:
            parse_code("ZZI\nIZZ\nZIZ")
        assert exc.value.line == 3 and "[1, 2]" in str(exc.value)

    def test_anticommuting(self):
        with pytest.raises(CodeParseError, match="anticommutes"):
            parse_code("XI\nZI")

    def test_length_mismatch(self):
        with pytest.raises(CodeParseError) as exc:
            load("malformed.stab")
        assert exc.value.line == 2

    def test_bad_character(self):
        with pytest.raises(CodeParseError, match="invalid character"):
            parse_code("XQ")

    def test_empty(self):
        with pytest.raises(CodeParseError):
            parse_code("# nothing\n")


class TestGroup:
    def test_group_size_and_uniqueness(self, shor):
        elems = list(group_elements(shor))
        assert len(elems) == 2**shor.m
        assert len({(p.x, p.z) for p in elems}) == 2**shor.m

    @pytest.mark.parametrize("name,expected", [("five_qubit.stab", 4), ("shor9.stab", 2),
                                               ("six_one_three.stab", 1)])
    def test_min_weight(self, name, expected):
        assert group_min_weight(load(name)) == expected

    def test_min_weight_two_qubit(self):
        assert group_min_weight(parse_code("XX\nZZ")) == 2

    def test_min_weight_cap(self, five):
        assert group_min_weight(five, weight_cap=3) is None

    def test_guard(self, shor):
        with pytest.raises(TooLargeError):
            group_min_weight(shor, guard=4)


class TestDistance:
    @pytest.mark.parametrize("name", ["five_qubit.stab", "shor9.stab", "six_one_three.stab",
                                      "eight_three_three.stab"])
    def test_distance_three(self, name):
        assert distance(load(name)) == 3

    def test_distance_oracle_full_enumeration(self, five, shor):
        for code in (five, shor):
            best = None
            for letters in itertools.product("IXYZ", repeat=code.n):
                p = PauliOperator.from_string("".join(letters))
                if code.in_normalizer(p) and not code.in_stabilizer(p):
                    best = p.weight if best is None else min(best, p.weight)
            assert best == distance(code)

    def test_cap(self, five):
        with pytest.raises(DistanceNotFound) as exc:
            distance(five, cap=2)
        assert exc.value.lower_bound == 3

    def test_no_logicals(self):
        with pytest.raises(DistanceNotFound):
            distance(parse_code("XX\nZZ"))

    def test_guard(self, shor):
        with pytest.raises(TooLargeError):
            distance(shor, guard=8)


class TestProfile:
    def test_shor(self, shor):
        assert degeneracy_profile(shor, 1) == DegeneracyProfile(6, 12)

    def test_five(self, five):
        assert degeneracy_profile(five, 1) == DegeneracyProfile(0, 0)

    def test_six(self, six):
        assert degeneracy_profile(six, 1) == DegeneracyProfile(1, 1)

    @pytest.mark.parametrize("name", ["five_qubit.stab", "shor9.stab", "six_one_three.stab"])
    def test_greedy_matches_exhaustive(self, name):
        code = load(name)
        low = low_weight_elements(code, 1)
        assert len(low) <= 10
        prof = degeneracy_profile(code, 1)
        best = 0 if prof.ell == 0 else None
        for subset in itertools.combinations(low, prof.ell):
            if prof.ell and _rank(subset) == prof.ell:
                w = sum(p.weight for p in subset)
                best = w if best is None else min(best, w)
        assert best == prof.sigma


def _rank(ops):
    rows = [p.packed() for p in ops]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            continue
        rank += 1
        top = 1 << (pivot.bit_length() - 1)
        rows = [r ^ pivot if r & top else r for r in rows]
    return rank


class TestAnalysis:
    @pytest.mark.parametrize("name", ["five_qubit.stab", "eight_three_three.stab"])
    def test_extension_is_degenerate(self, name):
        base = analyze(load(name))
        ext = analyze(extend_with_z(load(name)))
        assert (ext.k, ext.d) == (base.k, base.d)
        assert not base.degenerate and ext.degenerate
        assert ext.min_stabilizer_weight == 1

    def test_degenerate_codes_have_s_min_below_d(self, shor, six):
        for code in (shor, six):
            a = analyze(code)
            assert a.degenerate and a.d > a.min_stabilizer_weight
            assert a.profile.ell >= 1


class TestAudit:
    def test_shor(self, shor):
        rep = audit(shor)
        assert rep.all_hold
        v = rep.verdict(BoundId.LEMMA1)
        assert v.max_k == 3 and "sigma > n" in v.note

    def test_five(self, five):
        rep = audit(five)
        assert rep.all_hold
        qh = rep.verdict(BoundId.QUANTUM_HAMMING)
        assert qh.saturated and qh.witness["equality"]
        assert rep.verdict(BoundId.DEGENERATE) is None
        assert rep.verdict(BoundId.PRIOR_DIST3) is None
        assert set(rep.skipped) == {"degenerate_bound", "prior_distance3_bound"}

    def test_six(self, six):
        rep = audit(six)
        assert rep.all_hold
        v = rep.verdict(BoundId.DEGENERATE)
        assert v.holds and v.witness["lhs"] == 2 * 13 and v.witness["rhs"] == 32

    @pytest.mark.parametrize("name", ["five_qubit.stab", "shor9.stab", "six_one_three.stab",
                                      "eight_three_three.stab"])
    def test_every_verdict_holds(self, name):
        assert audit(load(name)).all_hold
        assert audit(extend_with_z(load(name))).all_hold
