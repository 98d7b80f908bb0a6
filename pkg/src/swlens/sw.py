"""Eta invariants, the spin^c function F, and the invariants built from it.

For the round-metric family ``g_r`` every eta invariant has the form
``constant + r_coeff * (chi*r**2 - ell**2 * r**4)``; :class:`EtaValue`
keeps that pair so the cancellation in ``4*eta_dir + eta_sign`` is checked
symbolically instead of by sampling ``r``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .arith import frac, sign
from .cycpoly import (CycPoly, aug, f_poly, mul, one_hat, proj, sigma,
                      substitute, translate_equiv)
from .dedekind import dedekind_sum, dr_sum_fast, sawtooth
from .errors import RDependenceNonzero
from .seifert import (MINUS, GeometricSeifertData, LensSpace, SpincIndex,
                      chern_inverse, gammas, geometric_structure, make_lens,
                      rho, spinc_enumerate)


@dataclass(frozen=True)
class EtaValue:
    constant: Fraction
    r_coeff: Fraction

    def __add__(self, other: "EtaValue") -> "EtaValue":
        return EtaValue(self.constant + other.constant, self.r_coeff + other.r_coeff)

    def __rmul__(self, c) -> "EtaValue":
        return EtaValue(c * self.constant, c * self.r_coeff)

    def at(self, data: GeometricSeifertData, r) -> Fraction:
        r = Fraction(r)
        return self.constant + self.r_coeff * (data.chi * r**2 - data.ell**2 * r**4)


def _dedekind_pair(data: GeometricSeifertData) -> Fraction:
    if data.alpha == 1:
        return Fraction(0)
    return sum((dedekind_sum(w, data.alpha) for w in data.omegas), Fraction(0))


@lru_cache(maxsize=None)
def eta_sign(data: GeometricSeifertData) -> EtaValue:
    """Eta invariant of the odd signature operator for ``g_r``."""
    ell = data.ell
    const = -sign(ell) + ell / 3 - 4 * _dedekind_pair(data)
    return EtaValue(const, 2 * ell / 3)


def eta_dir(data: GeometricSeifertData, idx: SpincIndex) -> EtaValue:
    """Eta invariant of the Dirac operator twisted by the spin^c structure ``idx``."""
    ell, alpha = data.ell, data.alpha
    r_coeff = -ell / 6
    if alpha == 1:
        k = idx.k
        const = ell / 6 if k == 0 else ell / 6 + k * k / ell - sign(ell) * k
        return EtaValue(const, r_coeff)
    rh = rho(data, idx)
    gs = gammas(data, idx)
    if rh == 0:
        const = ell / 6
        for w, qi, g in zip(data.omegas, data.qs, gs):
            const -= 2 * dr_sum_fast(w, alpha, Fraction(g, alpha), 0)
            const -= sawtooth(Fraction(qi * g, alpha))
        return EtaValue(const, r_coeff)
    const = (1 - Fraction(1, alpha)) * (1 - 2 * rh) - ell * rh * (1 - rh) + 2 * rh + ell / 6
    for w, qi, g in zip(data.omegas, data.qs, gs):
        const -= 2 * dr_sum_fast(w, alpha, (g + w * rh) / alpha, -rh)
        const -= frac((qi * g + rh) / alpha)
    return EtaValue(const, r_coeff)


def F(data: GeometricSeifertData, idx: SpincIndex) -> Fraction:
    """``4*eta_dir + eta_sign``; raises if the metric parameter survives."""
    total = 4 * eta_dir(data, idx) + eta_sign(data)
    if total.r_coeff != 0:
        raise RDependenceNonzero(f"{data.lens} {idx}: r-coefficient {total.r_coeff}")
    return total.constant


def F_closed(data: GeometricSeifertData, idx: SpincIndex) -> Fraction:
    """Closed-form F assembled directly from Dedekind-Rademacher sums.

    Uses the general singular-fiber formula even when ``alpha == 1`` (the
    sums then collapse), so it is an independent route from :func:`F`.
    """
    ell, alpha = data.ell, data.alpha
    rh = rho(data, idx)
    gs = gammas(data, idx)
    val = ell - sign(ell) - 4 * sum(
        (dr_sum_fast(w, alpha, 0, 0) for w in data.omegas), Fraction(0))
    if rh == 0:
        for w, qi, g in zip(data.omegas, data.qs, gs):
            val -= 8 * dr_sum_fast(w, alpha, Fraction(g, alpha), 0)
            val -= 4 * sawtooth(Fraction(qi * g, alpha))
        return val
    val += 4 * (1 - Fraction(1, alpha)) * (1 - 2 * rh) - 4 * ell * rh * (1 - rh) + 8 * rh
    for w, qi, g in zip(data.omegas, data.qs, gs):
        val -= 8 * dr_sum_fast(w, alpha, (g + w * rh) / alpha, -rh)
        val -= 4 * frac((qi * g + rh) / alpha)
    return val


def F_case_a(ell: Fraction, k: int) -> Fraction:
    """Smooth circle-bundle case: ``(4/ell)k^2 - 4 sign(ell) k + ell - sign(ell)``."""
    s = sign(ell)
    return Fraction(4 * k * k) / ell - 4 * s * k + ell - s


@lru_cache(maxsize=None)
def F_table(L: LensSpace, sign_: str = MINUS) -> Dict[SpincIndex, Fraction]:
    data = geometric_structure(L, sign_)
    return {idx: F(data, idx) for idx in spinc_enumerate(data)}


def froyshov(L: LensSpace) -> Fraction:
    return froyshov_with_argmax(L)[0]


def froyshov_with_argmax(L: LensSpace) -> Tuple[Fraction, List[SpincIndex]]:
    table = F_table(L)
    best = max(table.values())
    return best, sorted(idx for idx, v in table.items() if v == best)


def sw_poly(L: LensSpace) -> CycPoly:
    """``SW_{p,q} = (1/8) sum_m F(c(m)) t^m`` with ``c`` the inverse Chern labeling."""
    data = geometric_structure(L)
    table = F_table(L)
    return CycPoly(L.p, [table[chern_inverse(data, m)] / 8 for m in range(L.p)])


def casson_walker(L: LensSpace) -> Fraction:
    """Casson-Walker invariant (Lescop normalization): ``-(p/2) s(q, p)``."""
    return -Fraction(L.p, 2) * dedekind_sum(L.q, L.p)


def torsion_part(L: LensSpace) -> CycPoly:
    return proj(sw_poly(L))


def _one_minus_t(p: int, m: int) -> CycPoly:
    return CycPoly.from_terms(p, [(0, 1), (m, -1)])


def milnor_torsion(L: LensSpace) -> CycPoly:
    """Representative ``proj((1/2 - f(t)) (1/2 - f(t^q)))`` of the torsion."""
    p, q = L.p, L.q
    f = f_poly(p)
    half = CycPoly.monomial(p, 0, Fraction(1, 2))
    return proj(mul(half - f, half - substitute(f, q)))


@dataclass(frozen=True)
class TorsionCheck:
    lens: LensSpace
    product: CycPoly
    shift: Optional[int]

    @property
    def ok(self) -> bool:
        return self.shift is not None


def torsion_identity_check(L: LensSpace, T: Optional[CycPoly] = None) -> TorsionCheck:
    """Compute ``T (1-t)(1-t^q)`` and the shift ``n`` with product ``= t^n * 1hat``."""
    T = torsion_part(L) if T is None else T
    prod = mul(mul(T, _one_minus_t(L.p, 1)), _one_minus_t(L.p, L.q))
    return TorsionCheck(L, prod, translate_equiv(prod, one_hat(L.p)))


@dataclass(frozen=True)
class LemmaABReport:
    lens: LensSpace
    from_sums: Dict[str, CycPoly]
    closed_forms: Dict[str, CycPoly]

    @property
    def ok(self) -> bool:
        return all(self.from_sums[k] == self.closed_forms[k] for k in self.closed_forms)

    @property
    def failures(self) -> List[str]:
        return [k for k in self.closed_forms if self.from_sums[k] != self.closed_forms[k]]


def lemma_ab_check(L: LensSpace) -> LemmaABReport:
    """Compare the generating functions ``A_i``, ``B_i`` with their f-polynomial forms.

    ``A_i = sum_m s(omega_i, p; gamma_i(c(m))/p, 0) t^m`` and
    ``B_i = sum_m ((q_i gamma_i(c(m))/p)) t^m``; requires ``gcd(p, q-1) = 1``.
    """
    data = geometric_structure(L)
    if data.n != 1:
        raise ValueError(f"{L}: identities need gcd(p, q-1) = 1, got n = {data.n}")
    p, q = L.p, L.q
    A = [[Fraction(0)] * p, [Fraction(0)] * p]
    B = [[Fraction(0)] * p, [Fraction(0)] * p]
    for m in range(p):
        gs = gammas(data, chern_inverse(data, m))
        for i, (w, qi, g) in enumerate(zip(data.omegas, data.qs, gs)):
            if p > 1:
                A[i][m] = dr_sum_fast(w, p, Fraction(g, p), 0)
            B[i][m] = sawtooth(Fraction(qi * g, p))
    f = f_poly(p)
    f_mq = substitute(f, -q)
    f_m1 = substitute(f, -1)
    f_q1 = substitute(f, q - 1)
    closed = {
        "B1": -f_mq.shift(-q),
        "B2": -f_m1.shift(-1),
        "A1": -mul(f_mq, f_q1).shift(-q),
        "A2": mul(f_m1, f_q1).shift(-1),
    }
    sums = {"A1": CycPoly(p, A[0]), "A2": CycPoly(p, A[1]),
            "B1": CycPoly(p, B[0]), "B2": CycPoly(p, B[1])}
    return LemmaABReport(L, sums, closed)


@dataclass(frozen=True)
class SWResult:
    lens: LensSpace
    sw_poly: CycPoly
    cw: Fraction
    torsion_part: CycPoly
    froyshov: Fraction
    argmax_indices: Tuple[SpincIndex, ...]
    torsion_shift: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "p": self.lens.p,
            "q": self.lens.q,
            "froyshov": str(self.froyshov),
            "cw": str(self.cw),
            "sw": self.sw_poly.to_json(),
            "T": self.torsion_part.to_json(),
            "torsion_shift": self.torsion_shift,
            "argmax": [idx.as_list() for idx in self.argmax_indices],
        }


def compute(p: int, q: int) -> SWResult:
    """Full invariant record for ``L(p, q)``."""
    L = make_lens(p, q)
    sw = sw_poly(L)
    T = proj(sw)
    fr, argmax = froyshov_with_argmax(L)
    return SWResult(
        lens=L, sw_poly=sw, cw=casson_walker(L), torsion_part=T,
        froyshov=fr, argmax_indices=tuple(argmax),
        torsion_shift=torsion_identity_check(L, T).shift,
    )
