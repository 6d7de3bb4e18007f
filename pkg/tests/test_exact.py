from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmwalk.exact import Dyadic, GaussianInt, gauss_pow_1pi

ints = st.integers(min_value=-(10**30), max_value=10**30)
exps = st.integers(min_value=0, max_value=80)
dyadics = st.builds(Dyadic, ints, exps)
gaussians = st.builds(GaussianInt, ints, ints)


def test_normal_form():
    d = Dyadic(12, 4)
    assert (d.numerator, d.exponent) == (3, 2)
    assert (Dyadic(0, 9).numerator, Dyadic(0, 9).exponent) == (0, 0)
    assert Dyadic(3, -2) == 12
    assert Dyadic(6, 1).is_integer()


@given(dyadics)
def test_normalized_invariant(d):
    # even numerators only survive on integers
    assert d.numerator % 2 == 1 or d.exponent == 0
    if d.numerator == 0:
        assert d.exponent == 0


@given(dyadics, dyadics)
def test_ring_ops_match_fractions(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)


@pytest.mark.parametrize("text, value", [
    ("5/2^2", Fraction(5, 4)),
    ("-3/8", Fraction(-3, 8)),
    ("7", Fraction(7)),
    ("6/2^3", Fraction(3, 4)),
])
def test_parse(text, value):
    assert Dyadic.parse(text).to_fraction() == value


def test_parse_rejects_non_dyadic():
    with pytest.raises(ValueError):
        Dyadic.parse("1/3")


@given(dyadics)
def test_str_roundtrip(d):
    assert Dyadic.parse(str(d)) == d


def test_decimal_presentation():
    assert str(Dyadic(1, 2).to_decimal()) == "0.25"
    assert str(Dyadic(1, 3).to_decimal(2)) == "0.12"  # 0.125 rounds half to even


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).norm() == a.norm() * b.norm()
    assert a.norm() >= 0


@given(gaussians, st.integers(min_value=0, max_value=12))
def test_pow_matches_repeated_product(g, k):
    p = GaussianInt(1, 0)
    for _ in range(k):
        p = p * g
    assert g ** k == p


def test_units():
    assert [GaussianInt.unit(k) for k in range(5)] == [1, GaussianInt(0, 1), -1, GaussianInt(0, -1), 1]


@pytest.mark.parametrize("n, expected", [
    (0, GaussianInt(1, 0)),
    (4, GaussianInt(-4, 0)),
    (12, GaussianInt(-64, 0)),
    (8, GaussianInt(16, 0)),
    (3, GaussianInt(-2, 2)),
])
def test_gauss_pow_1pi(n, expected):
    # oracle: iterated multiplication by (1 + i)
    g = GaussianInt(1, 0)
    for _ in range(n):
        g = g * GaussianInt(1, 1)
    assert g == expected
    assert gauss_pow_1pi(n) == expected
