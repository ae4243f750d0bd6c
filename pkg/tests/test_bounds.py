import pytest
from hypothesis import given, strategies as st

from degenbound.bounds import (
    BoundId,
    CodeParams,
    DegeneracyProfile,
    classical_hamming_holds,
    degenerate_bound_max_k,
    ell_t_bound_max_k,
    lemma1_max_k,
    prior_bound_holds,
    qhamming_max_k,
    shifted_form_max_k,
    singleton_max_k,
)
from degenbound.thresholds import compute_N

from oracles import largest_k_loop, sphere_sum_terms


def test_code_params_validation():
    assert CodeParams(9, 1, 3).t == 1
    assert CodeParams(7, 1, 4).t == 1
    for bad in [(0, 0, 1), (3, 4, 1), (3, 1, 0)]:
        with pytest.raises(ValueError):
            CodeParams(*bad)


def test_profile_invariants():
    DegeneracyProfile(6, 12).validate(1)
    with pytest.raises(ValueError):
        DegeneracyProfile(2, 5).validate(1)
    with pytest.raises(ValueError):
        DegeneracyProfile(0, 1).validate(1)


class TestQuantumHamming:
    def test_five_qubit_saturates(self):
        assert qhamming_max_k(5, 1) == 1
        assert 2 * sphere_sum_terms(5, 1) == 2**5

    @pytest.mark.parametrize("n", [1, 7, 40])
    def test_t0_is_n(self, n):
        assert qhamming_max_k(n, 0) == n

    def test_not_tight_at_ten(self):
        assert qhamming_max_k(10, 1) == 5

    def test_none_admissible(self):
        assert qhamming_max_k(3, 1) is None


def test_classical_hamming():
    v = classical_hamming_holds(7, 16, 3, 2)
    assert v.holds and v.saturated
    assert v.witness == {"lhs": 128, "rhs": 128}
    assert classical_hamming_holds(9, 1, 1, 2).holds
    # 4 * (1 + 5) = 24 <= 32
    v = classical_hamming_holds(5, 4, 3, 2)
    assert v.holds and not v.saturated
    assert v.bound_id is BoundId.CLASSICAL_HAMMING
    assert not classical_hamming_holds(5, 6, 3, 2).holds


class TestLemma1:
    def test_shor_profile_takes_sigma_gt_n_branch(self):
        assert lemma1_max_k(9, 1, DegeneracyProfile(6, 12)) == 3

    def test_single_weight_two_generator(self):
        assert lemma1_max_k(6, 1, DegeneracyProfile(1, 2)) == 1

    @pytest.mark.parametrize("n", range(1, 60))
    @pytest.mark.parametrize("t", [0, 1, 2, 3])
    def test_empty_profile_is_hamming(self, n, t):
        assert lemma1_max_k(n, t, DegeneracyProfile()) == qhamming_max_k(n, t)

    @pytest.mark.parametrize("profile", [DegeneracyProfile(6, 12), DegeneracyProfile(1, 2),
                                         DegeneracyProfile(3, 6), DegeneracyProfile(8, 14)])
    @pytest.mark.parametrize("n", [6, 9, 26])
    def test_shifted_form_examples(self, n, profile):
        assert shifted_form_max_k(n, 1, profile) == lemma1_max_k(n, 1, profile)


def _profiles(t, ell_max):
    for ell in range(0, ell_max + 1):
        sigmas = [0] if ell == 0 else range(ell, 2 * t * ell + 1)
        for sigma in sigmas:
            yield DegeneracyProfile(ell, sigma)


def test_shifted_form_equivalence_exhaustive():
    for t in range(0, 5):
        for profile in _profiles(t, 6 if t else 0):
            for n in range(1, 101):
                assert lemma1_max_k(n, t, profile) == shifted_form_max_k(n, t, profile)


@given(st.integers(1, 80), st.integers(1, 3), st.integers(0, 5), st.data())
def test_lemma1_matches_brute_force_loop(n, t, ell, data):
    sigma = 0 if ell == 0 else data.draw(st.integers(ell, 2 * t * ell))
    assert lemma1_max_k(n, t, DegeneracyProfile(ell, sigma)) == largest_k_loop(n, t, ell, sigma)


def test_unit_shift_dominance():
    """Raising sigma by one never lowers the admissible k; sigma = 2t*ell is the weakest."""
    for t in range(1, 5):
        for ell in range(1, 8):
            for sigma in range(ell, 2 * t * ell):
                for n in range(1, 101):
                    lo = lemma1_max_k(n, t, DegeneracyProfile(ell, sigma))
                    hi = lemma1_max_k(n, t, DegeneracyProfile(ell, sigma + 1))
                    assert (lo is None) or (hi is not None and hi >= lo)


class TestEllT:
    @pytest.mark.parametrize("n", [5, 12, 77])
    def test_zero_ell_is_hamming(self, n):
        assert ell_t_bound_max_k(n, 2, 0) == qhamming_max_k(n, 2)

    def test_examples(self):
        assert ell_t_bound_max_k(6, 1, 1) == 1
        assert ell_t_bound_max_k(4, 1, 3) == 1

    def test_matches_worst_case_lemma1(self):
        for n in range(1, 80):
            for ell in range(1, 6):
                assert ell_t_bound_max_k(n, 2, ell) == lemma1_max_k(
                    n, 2, DegeneracyProfile(ell, 4 * ell))


@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("ell", [0, 1, 2, 3])
def test_nesting_after_threshold(t, ell):
    N = compute_N(t, ell)
    for n in range(N, N + 201):
        base = ell_t_bound_max_k(n, t, ell)
        for other in range(ell + 1, ell + 11):
            assert ell_t_bound_max_k(n, t, other) <= base


class TestDegenerateBound:
    def test_examples(self):
        assert degenerate_bound_max_k(6, 1) == 1
        assert degenerate_bound_max_k(13, 1) == 6
        assert degenerate_bound_max_k(23, 1) == 16
        # 2^16 * 64 = 2^22: saturated with equality
        assert 2**16 * sphere_sum_terms(21, 1) == 2**22

    def test_precondition(self):
        with pytest.raises(ValueError):
            degenerate_bound_max_k(2, 1)

    def test_below_hamming_from_twelve(self):
        for n in range(12, 400):
            assert degenerate_bound_max_k(n, 1) <= qhamming_max_k(n, 1)


class TestPriorBound:
    @pytest.mark.parametrize("n,k,holds", [(6, 1, True), (5, 1, False), (9, 3, True)])
    def test_examples(self, n, k, holds):
        v = prior_bound_holds(n, k)
        assert v.holds is holds
        assert v.holds == (v.max_k is not None and k <= v.max_k)

    def test_witness(self):
        assert prior_bound_holds(6, 1).witness == {"lhs": 24, "rhs": 32}


@pytest.mark.parametrize("n,d,expected", [(5, 3, 1), (9, 1, 9), (7, 4, 1), (3, 3, None)])
def test_singleton(n, d, expected):
    assert singleton_max_k(n, d) == expected


def test_recomputation_is_bit_identical():
    values = [[ell_t_bound_max_k(n, t, ell) for n in range(1, 120)]
              for t in (1, 2, 3) for ell in range(4)]
    again = [[ell_t_bound_max_k(n, t, ell) for n in range(1, 120)]
             for t in (1, 2, 3) for ell in range(4)]
    assert values == again
