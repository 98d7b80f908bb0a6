from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swlens.arith import gcd
from swlens.errors import BadModulus, NotCoprime, UnsupportedStructure
from swlens.seifert import (MINUS, PLUS, LensSpace, SpincIndex, chern_class, chern_inverse,
                            chern_inverse_closed, gamma1, gamma2, geometric_structure,
                            iter_lens_spaces, make_lens, rho, spinc_enumerate)

Q = Fraction


@st.composite
def lens_spaces(draw, p_max=100):
    p = draw(st.integers(2, p_max))
    q = draw(st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
    return LensSpace(p, q)


def test_make_lens():
    assert make_lens(5, 7) == LensSpace(5, 2)
    assert make_lens(5, -1) == LensSpace(5, 4)
    with pytest.raises(NotCoprime):
        make_lens(4, 2)
    with pytest.raises(BadModulus):
        make_lens(1, 1)


@pytest.mark.parametrize("p", [5, 7, 9, 11, 13])
def test_lp2_minus_structure(p):
    d = geometric_structure(LensSpace(p, 2))
    assert (d.alpha, d.n, d.beta1, d.beta2, d.ell) == (p, 1, 2 - p, p - 1, Q(-1, p))
    # labels follow omega_i = -beta_i mod alpha
    assert (d.omega1, d.omega2) == (p - 2, 1)
    assert (d.q1, d.q2) == ((p - 1) // 2, 1)


def test_lp1_and_l73():
    d = geometric_structure(LensSpace(6, 1))
    assert (d.n, d.alpha, d.ell) == (6, 1, -6)
    d = geometric_structure(LensSpace(7, 3))
    assert (d.n, d.alpha, d.omega2, d.omega1) == (1, 7, 4, 2)


@given(lens_spaces(), st.sampled_from([PLUS, MINUS]))
def test_structure_invariants(L, sign_):
    d = geometric_structure(L, sign_)
    p, q = L.p, L.q
    assert d.n * d.alpha == p
    assert d.n == gcd(p, q - 1 if sign_ == MINUS else q + 1)
    assert d.beta1 + d.beta2 == (d.n if sign_ == MINUS else -d.n)
    c = (q - 1 if sign_ == MINUS else q + 1) // d.n
    assert (d.beta2 * c + 1) % d.alpha == 0
    assert ((-d.beta1) % d.alpha, (-d.beta2) % d.alpha) == (d.omega1, d.omega2)
    if d.alpha > 1:
        assert d.q1 * d.omega1 % d.alpha == 1 and d.q2 * d.omega2 % d.alpha == 1
    assert d.ell * d.alpha == (-d.n if sign_ == MINUS else d.n)
    assert d.kappa == -d.chi


def test_spinc_enumeration():
    d = geometric_structure(LensSpace(5, 2))
    assert spinc_enumerate(d) == [SpincIndex(0, j) for j in range(5)]
    d = geometric_structure(LensSpace(4, 1))
    assert spinc_enumerate(d) == [SpincIndex(k, 0) for k in range(4)]
    for L in iter_lens_spaces(30):
        assert len(spinc_enumerate(geometric_structure(L))) == L.p


def test_rho_gamma():
    d = geometric_structure(LensSpace(7, 3))
    idx = SpincIndex(0, 2)
    assert (rho(d, idx), gamma1(d, idx), gamma2(d, idx)) == (0, 2, 4)
    d = geometric_structure(LensSpace(9, 4))
    idx = SpincIndex(2, 1)
    assert (d.n, d.alpha) == (3, 3)
    assert (rho(d, idx), gamma1(d, idx), gamma2(d, idx)) == (Q(2, 3), 1, 0)
    for L in iter_lens_spaces(20):
        d = geometric_structure(L)
        assert gamma2(d, SpincIndex(0, d.alpha - 1)) == 0


def test_chern_examples():
    d = geometric_structure(LensSpace(7, 3))
    assert chern_class(d, SpincIndex(0, 0)) == 4
    assert chern_inverse(d, 4) == SpincIndex(0, 0)
    d = geometric_structure(LensSpace(9, 4))
    assert chern_inverse(d, 8) == SpincIndex(0, 2)
    for p in range(2, 20):
        d = geometric_structure(LensSpace(p, 1))
        for k in range(p):
            assert chern_class(d, SpincIndex(k, 0)) == (k - 1) % p


def test_chern_bijection_and_closed_inverse():
    for L in iter_lens_spaces(100):
        d = geometric_structure(L)
        images = {chern_class(d, idx) for idx in spinc_enumerate(d)}
        assert images == set(range(L.p))
        for m in range(L.p):
            assert chern_class(d, chern_inverse(d, m)) == m
            assert chern_inverse_closed(d, m) == chern_inverse(d, m), (L, m)


def test_plus_structure_rejects_chern():
    d = geometric_structure(LensSpace(7, 3), PLUS)
    with pytest.raises(UnsupportedStructure):
        chern_class(d, SpincIndex(0, 0))
    with pytest.raises(UnsupportedStructure):
        chern_inverse(d, 0)


def test_iter_sorted():
    got = list(iter_lens_spaces(6))
    assert got == sorted(got)
    assert LensSpace(6, 5) in got and LensSpace(6, 3) not in got
