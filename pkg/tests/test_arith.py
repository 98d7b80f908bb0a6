from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swlens.arith import (as_rational, ceil, floor, frac, gcd, is_integer, mod_inverse,
                          normalize_mod, parse_rational, rational_str, sign)
from swlens.errors import BadModulus, NotCoprime, ZeroDenominator

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize("a,b,g", [(12, 8, 4), (7, 0, 7), (9, 3, 3), (0, 0, 0), (-12, 8, 4)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


@pytest.mark.parametrize("a,m,inv", [(2, 7, 4), (1, 5, 1), (3, 5, 2), (5, 1, 0)])
def test_mod_inverse_examples(a, m, inv):
    assert mod_inverse(a, m) == inv


def test_mod_inverse_exhaustive_small():
    for m in range(2, 40):
        for a in range(m):
            if gcd(a, m) != 1:
                with pytest.raises(NotCoprime):
                    mod_inverse(a, m)
            else:
                expected = next(x for x in range(m) if a * x % m == 1)
                assert mod_inverse(a, m) == expected


@given(st.integers(2, 10**6), st.integers(-10**9, 10**9))
def test_mod_inverse_roundtrip(m, a):
    if gcd(a, m) != 1:
        return
    assert a * mod_inverse(a, m) % m == 1


@pytest.mark.parametrize("x,m,r", [(-1, 7, 6), (14, 7, 0), (-14, 5, 1)])
def test_normalize_mod(x, m, r):
    assert normalize_mod(x, m) == r


def test_normalize_mod_rejects_bad_modulus():
    with pytest.raises(BadModulus):
        normalize_mod(3, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 1000))
def test_normalize_mod_reconstructs(x, m):
    assert normalize_mod(x, m) + m * floor(Fraction(x, m)) == x


def test_floor_ceil_frac_examples():
    assert ceil(Fraction(8, 5)) == 2
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(3) == 0


@given(rationals)
def test_floor_ceil_frac_laws(x):
    assert floor(x) <= x < floor(x) + 1
    assert ceil(x) == -floor(-x)
    assert 0 <= frac(x) < 1
    assert is_integer(x) == (frac(x) == 0)


@given(rationals, rationals)
def test_exact_field_ops(a, b):
    assert (a + b) - b == a
    assert a + b == b + a


@given(rationals)
def test_string_roundtrip(x):
    assert parse_rational(rational_str(x)) == x


def test_rational_strings_canonical():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(-10, 2)) == "-5"
    assert rational_str(Fraction(5, -16)) == "-5/16"


def test_parse_rejects_decimals_and_zero_denominator():
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ZeroDenominator):
        as_rational("1/0")


def test_sign():
    assert [sign(-3), sign(0), sign(Fraction(1, 7))] == [-1, 0, 1]
