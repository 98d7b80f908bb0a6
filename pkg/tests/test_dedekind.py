from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from swlens import dedekind
from swlens.arith import gcd
from swlens.dedekind import (RademacherArgs, bernoulli_psi2, dedekind_sum, dr_sum_brute,
                             dr_sum_fast, dr_sum_reflected, reciprocity_rhs, sawtooth)
from swlens.errors import BadModulus, NotCoprime

Q = Fraction
small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=40)


def naive(beta, alpha, x, y):
    return sum((sawtooth(x + beta * Q(r + y, 1) / alpha) * sawtooth((r + y) / Q(alpha))
                for r in range(1, alpha + 1)), Q(0))


@pytest.mark.parametrize("x,v", [(0, 0), (Q(1, 2), 0), (Q(1, 3), Q(-1, 6)), (Q(-1, 3), Q(1, 6))])
def test_sawtooth_examples(x, v):
    assert sawtooth(x) == v


@given(small_rationals)
def test_sawtooth_periodic_odd(x):
    assert sawtooth(x + 1) == sawtooth(x)
    assert sawtooth(-x) == -sawtooth(x)
    assert -Q(1, 2) < sawtooth(x) < Q(1, 2)


@pytest.mark.parametrize("x,v", [(0, Q(1, 6)), (Q(1, 2), Q(-1, 12)), (Q(7, 3), Q(-1, 18))])
def test_psi2_examples(x, v):
    assert bernoulli_psi2(x) == v


@pytest.mark.parametrize("args,v", [((1, 2, 0, 0), 0), ((1, 3, 0, 0), Q(1, 18)), ((1, 4, 0, 0), Q(1, 8))])
def test_brute_examples(args, v):
    assert dr_sum_brute(*args) == v


def test_brute_accepts_dataclass():
    assert dr_sum_brute(RademacherArgs(1, 3)) == Q(1, 18)
    assert dr_sum_fast(RademacherArgs(2, 5, Q(1, 5), 0)) == dr_sum_brute(2, 5, Q(1, 5), 0)


def test_base_case_alpha_one():
    for b in range(-6, 7):
        for x in (0, Q(1, 3), Q(-2, 5)):
            for y in (0, Q(1, 2), Q(7, 3)):
                assert dr_sum_brute(b, 1, x, y) == sawtooth(b * y + x) * sawtooth(y)


def test_integer_reciprocity_example():
    assert dr_sum_fast(3, 5) + dr_sum_fast(5, 3) == Q(-1, 18)
    assert reciprocity_rhs(3, 5, 0, 0) == Q(-1, 18)


@given(st.integers(1, 40), st.integers(-80, 80), small_rationals, small_rationals)
def test_brute_matches_naive(alpha, beta, x, y):
    assume(alpha == 1 or gcd(beta, alpha) == 1)
    assert dr_sum_brute(beta, alpha, x, y) == naive(beta, alpha, x, y)


@given(st.integers(1, 300), st.integers(-900, 900), small_rationals, small_rationals)
def test_fast_matches_brute(alpha, beta, x, y):
    assume(alpha == 1 or gcd(beta, alpha) == 1)
    assert dr_sum_fast(beta, alpha, x, y) == dr_sum_brute(beta, alpha, x, y)


@given(st.integers(1, 30), st.integers(1, 30), small_rationals, small_rationals)
def test_reciprocity(alpha, beta, x, y):
    assume(gcd(alpha, beta) == 1)
    lhs = dr_sum_brute(beta, alpha, x, y) + dr_sum_brute(alpha, beta, y, x)
    assert lhs == reciprocity_rhs(beta, alpha, x, y)


@given(st.integers(1, 30), st.integers(-30, 30), st.integers(-5, 5), small_rationals, small_rationals)
def test_shift_law(alpha, beta, m, x, y):
    assume(alpha == 1 or gcd(beta, alpha) == 1)
    assert dr_sum_brute(beta, alpha, x, y) == dr_sum_brute(beta - m * alpha, alpha, x + m * y, y)


@given(st.integers(1, 40), st.integers(-40, 40), small_rationals, small_rationals)
def test_reflection(alpha, beta, x, y):
    assume(alpha == 1 or gcd(beta, alpha) == 1)
    assert dr_sum_reflected(beta, alpha, x, y) == dr_sum_brute(beta, alpha, x, y)


@pytest.mark.parametrize("p", [5, 7, 9, 11, 31])
def test_s2_minus_s1(p):
    assert 4 * (dedekind_sum(2, p) - dedekind_sum(1, p)) == Q(-p, 6) + Q(1, 6 * p)


@given(st.integers(1, 60), st.sampled_from([Q(0), Q(1, 2), Q(1, 3), Q(5, 7), Q(13, 4)]))
def test_distribution_identity(m, w):
    assert sum((sawtooth((mu + w) / m) for mu in range(m)), Q(0)) == sawtooth(w)


def test_cache_does_not_change_results():
    vals = [dr_sum_fast(b, 97, Q(b, 7), Q(-1, 3)) for b in range(1, 97)]
    old = dedekind.USE_CACHE
    try:
        dedekind.USE_CACHE = False
        dedekind.clear_cache()
        assert vals == [dr_sum_fast(b, 97, Q(b, 7), Q(-1, 3)) for b in range(1, 97)]
    finally:
        dedekind.USE_CACHE = old


def test_errors():
    with pytest.raises(NotCoprime):
        dr_sum_fast(2, 4, 0, 0)
    with pytest.raises(NotCoprime):
        dedekind_sum(3, 9)
    with pytest.raises(BadModulus):
        RademacherArgs(1, 0)
    with pytest.raises(BadModulus):
        dr_sum_fast(1, 0)


def test_large_alpha_is_fast_and_exact():
    p = 10**12 + 39
    v = dedekind_sum(10**6 + 3, p)
    assert isinstance(v, Fraction)
    assert v + dedekind_sum(p, 10**6 + 3) == reciprocity_rhs(10**6 + 3, p, 0, 0)
