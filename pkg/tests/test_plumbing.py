from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from swlens.arith import gcd
from swlens.errors import NotCoprime, NotNegativeDefinite, ZeroDenominator
from swlens.plumbing import (ContinuedFraction, IntersectionForm, cf_eval, elkies_theta,
                             elkies_theta_brute, hj_expand, is_negative_definite,
                             linear_plumbing_form, plumbing_record, theta_pq)
from swlens.seifert import LensSpace
from swlens.sw import froyshov

Q = Fraction


def test_cf_eval_examples():
    assert cf_eval(ContinuedFraction((2, 3, 2))) == Q(8, 5)
    assert cf_eval(ContinuedFraction((-2, -2))) == Q(-3, 2)
    # a blow-up inserts a 1 and bumps both neighbours
    assert cf_eval([2, 3]) == cf_eval([3, 1, 4]) == Q(5, 3)
    assert cf_eval([2, 1]) == 1 and cf_eval([3, 1, 3]) == Q(3, 2)


def test_cf_zero_denominator():
    with pytest.raises(ZeroDenominator):
        cf_eval([1, 1, 1])
    with pytest.raises(ZeroDenominator):
        ContinuedFraction((2, 0))


def test_hj_examples():
    assert hj_expand(8, 5).weights == (2, 3, 2)
    assert hj_expand(3, -2).weights == (-2, -2)
    for k in range(1, 10):
        assert hj_expand(4 * k + 1, 2).weights == (2 * k + 1, 2)
    for p in range(2, 20):
        assert hj_expand(p, 1).weights == (p,)


def test_hj_errors():
    with pytest.raises(NotCoprime):
        hj_expand(6, 4)
    with pytest.raises(ZeroDenominator):
        hj_expand(5, 0)


@given(st.integers(-300, 300), st.integers(-300, 300))
def test_hj_roundtrip_signed(p, q):
    assume(q != 0 and p != 0 and gcd(p, q) == 1)
    cf = hj_expand(p, q)
    assert cf_eval(cf) == Q(p, q)
    assert all((w > 0) == (q > 0) for w in cf.weights)


def test_hj_weights_and_det():
    for p in range(2, 120):
        for q in range(1, p):
            if gcd(p, q) == 1:
                cf = hj_expand(p, q)
                assert all(w >= 2 for w in cf.weights)
                assert abs(linear_plumbing_form(cf).determinant()) == p


def test_plumbing_forms():
    k = 3
    assert linear_plumbing_form([2 * k + 1, 2]).gram == ((-(2 * k + 1), 1), (1, -2))
    assert linear_plumbing_form([7]).gram == ((-7,),)
    f = linear_plumbing_form([2, 2])
    assert f.gram == ((-2, 1), (1, -2)) and f.determinant() == 3


def test_negative_definite():
    assert is_negative_definite(IntersectionForm([[-5]]))
    assert is_negative_definite(IntersectionForm([[-2, 1], [1, -2]]))
    assert not is_negative_definite(IntersectionForm([[1]]))
    assert not is_negative_definite(IntersectionForm([[-1, 2], [2, -1]]))
    with pytest.raises(NotNegativeDefinite):
        elkies_theta(IntersectionForm([[1]]))
    with pytest.raises(ValueError):
        IntersectionForm([[1, 2], [3, 4]])


def test_theta_examples():
    assert elkies_theta(IntersectionForm([[-2, 1], [1, -2]])) == 2
    assert theta_pq(7, 1) == Q(6, 7)
    assert theta_pq(7, 2) == 2
    assert theta_pq(9, 2) == Q(16, 9)
    for p in range(3, 40, 2):
        assert elkies_theta(IntersectionForm([[-p]])) == 1 - Q(1, p)
    for k in range(1, 8):
        assert theta_pq(4 * k + 1, 2) == 2 - Q(2, 4 * k + 1)
        assert theta_pq(4 * k - 1, 2) == 2


@st.composite
def small_forms(draw):
    n = draw(st.integers(1, 3))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -draw(st.integers(1, 6))
        for j in range(i):
            g[i][j] = g[j][i] = draw(st.integers(-6, 6))
    return IntersectionForm(g)


@given(small_forms())
def test_theta_matches_box_search(form):
    assume(is_negative_definite(form))
    assert elkies_theta(form) == elkies_theta_brute(form, 10)


@given(small_forms())
def test_theta_stable_under_minus_one(form):
    assume(is_negative_definite(form))
    assert elkies_theta(form.direct_sum(IntersectionForm([[-1]]))) == elkies_theta(form)


def test_conjecture_pairs_small():
    for p in range(2, 25):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert theta_pq(p, q) == froyshov(LensSpace(p, q)), (p, q)


def test_record_schema():
    rec = plumbing_record(8, 5)
    assert rec == {"p": 8, "q": 5, "hj_weights": [2, 3, 2],
                   "gram": [[-2, 1, 0], [1, -3, 1], [0, 1, -2]], "theta": "5/2"}
    assert Q(rec["theta"]) == froyshov(LensSpace(8, 5))
