import random
from fractions import Fraction

import pytest

from degenbound.calculus import (
    DerivativeTriple,
    derivative_triple,
    display_decimal,
    fprime_harmonic,
    h_value_floor,
    hprime_approx,
    hprime_sign,
    hsecond_sign,
)
from degenbound.exact import Sign, sphere_sum


@pytest.mark.parametrize(
    "t,x,expected",
    [
        (1, 0, (1, 3, 0)),
        (2, 2, (16, Fraction(33, 2), 9)),
        (0, 5, (1, 0, 0)),
        (0, Fraction(-7, 3), (1, 0, 0)),
    ],
)
def test_derivative_triple(t, x, expected):
    assert derivative_triple(t, x) == DerivativeTriple(*map(Fraction, expected))


@pytest.mark.parametrize("t", range(0, 7))
def test_polynomial_agrees_with_sphere_sum(t):
    for n in range(0, 40):
        assert derivative_triple(t, n).f == sphere_sum(n, t)


def test_polynomial_derivative_matches_harmonic_form():
    rng = random.Random(20240601)
    for _ in range(100):
        t = rng.randint(1, 8)
        x = Fraction(rng.randint(t * 1000 + 1, t * 1000 + 50_000), 1000)
        assert derivative_triple(t, x).f1 == fprime_harmonic(t, x)


def test_finite_difference_order():
    t, x = 4, Fraction(37, 3)
    exact = derivative_triple(t, x).f1
    errors = []
    for h in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000)):
        fd = (derivative_triple(t, x + h).f - derivative_triple(t, x - h).f) / (2 * h)
        errors.append(abs(fd - exact))
    for big, small in zip(errors, errors[1:]):
        assert 99 <= big / small <= 101


@pytest.mark.parametrize("t,n,expected", [(1, 1, -1), (3, 2, -2), (1, -4, -4), (2, 0, 0)])
def test_h_value_closed_forms(t, n, expected):
    assert h_value_floor(t, n).exact == expected


def test_h_value_general():
    hv = h_value_floor(1, 5)
    assert hv.exact is None and hv.f == 16


def test_hprime_spot_values():
    s1 = hprime_sign(1, 0)
    s2 = hprime_sign(2, 2)
    assert s1.sign == Sign.NEGATIVE and s2.sign == Sign.NEGATIVE
    assert abs(hprime_approx(1, 0) - Fraction(-3328, 1000)) <= Fraction(1, 1000)
    assert abs(hprime_approx(2, 2) - Fraction(-488, 1000)) <= Fraction(1, 1000)
    assert display_decimal(hprime_approx(1, 0)) == "-3.328"
    assert display_decimal(hprime_approx(2, 2)) == "-0.488"


@pytest.mark.parametrize("t", range(1, 51))
def test_hprime_positive_at_2t(t):
    assert hprime_sign(t, 2 * t).sign == Sign.POSITIVE


def test_hprime_sign_via_negated_inputs():
    from degenbound.exact import sign_of_q_minus_r_ln2

    for t in range(1, 10):
        for x in (2 * t - 2, 2 * t, 3 * t):
            tri = derivative_triple(t, x)
            direct = hprime_sign(t, x).sign
            negated = sign_of_q_minus_r_ln2(-tri.f1, -tri.f).sign
            assert direct == negated


def test_hprime_domain_guard():
    with pytest.raises(ValueError):
        hprime_sign(4, 1)


@pytest.mark.parametrize("t,x", [(1, 1), (2, 2)] + [(t, t) for t in range(1, 21)])
def test_hsecond_positive(t, x):
    assert hsecond_sign(t, x) == Sign.POSITIVE


def test_hsecond_values():
    tri = derivative_triple(2, 2)
    assert tri.f1**2 - tri.f * tri.f2 == Fraction(1089, 4) - 144


def test_integer_sequence_convexity():
    # h(n+1) - h(n) nondecreasing  <=>  f(n+2) f(n) <= f(n+1)^2
    for t in range(1, 8):
        f = [sphere_sum(n, t) for n in range(t, t + 300)]
        for a, b, c in zip(f, f[1:], f[2:]):
            assert c * a <= b * b
