"""Lens spaces, their two geometric Seifert structures and spin^c bookkeeping.

The ``minus`` structure (multiplicity ``alpha = p / gcd(p, q-1)``) is the
default for every downstream invariant.  Spin^c structures are indexed by
pairs ``(k, j)`` with ``0 <= k < n`` and ``0 <= j < alpha``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple

from .arith import gcd, mod_inverse, sign
from .errors import BadModulus, NotCoprime, UnsupportedStructure

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def make_lens(p: int, q: int) -> LensSpace:
    """Normalize ``q`` into ``[1, p)``; ``L(p, q)`` and ``L(p, q + kp)`` coincide."""
    if p < 2:
        raise BadModulus(f"lens spaces need p >= 2, got {p}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    return LensSpace(p, q % p)


@dataclass(frozen=True, order=True)
class SpincIndex:
    k: int
    j: int

    def as_list(self) -> List[int]:
        return [self.k, self.j]


@dataclass(frozen=True)
class GeometricSeifertData:
    lens: LensSpace
    sign: str
    n: int  # gcd(p, q -/+ 1); always positive
    alpha: int
    beta1: int
    beta2: int
    omega1: int
    omega2: int
    q1: int
    q2: int
    ell: Fraction
    kappa: Fraction = field(init=False)
    chi: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "kappa", Fraction(-2, self.alpha))
        object.__setattr__(self, "chi", Fraction(2, self.alpha))

    @property
    def omegas(self) -> Tuple[int, int]:
        return (self.omega1, self.omega2)

    @property
    def qs(self) -> Tuple[int, int]:
        return (self.q1, self.q2)


@lru_cache(maxsize=4096)
def geometric_structure(L: LensSpace, sign_: str = MINUS) -> GeometricSeifertData:
    """Seifert data of ``S_+`` or ``S_-`` on ``L``.

    ``beta2`` is the representative in ``[0, alpha)`` of the solution of
    ``beta2 * (q -/+ 1)/n == -1 (mod alpha)``; ``beta1`` then follows from
    ``beta1 + beta2 = +n`` (minus) or ``-n`` (plus).
    """
    p, q = L.p, L.q
    if sign_ == MINUS:
        n = gcd(p, q - 1)
        total = n
        c = (q - 1) // n
    elif sign_ == PLUS:
        n = gcd(p, q + 1)
        total = -n
        c = (q + 1) // n
    else:
        raise ValueError(f"sign must be {PLUS!r} or {MINUS!r}")
    alpha = p // n
    beta2 = (-mod_inverse(c, alpha)) % alpha if alpha > 1 else 0
    beta1 = total - beta2
    omega1, omega2 = (-beta1) % alpha, (-beta2) % alpha
    return GeometricSeifertData(
        lens=L, sign=sign_, n=n, alpha=alpha,
        beta1=beta1, beta2=beta2, omega1=omega1, omega2=omega2,
        q1=mod_inverse(omega1, alpha) if alpha > 1 else 0,
        q2=mod_inverse(omega2, alpha) if alpha > 1 else 0,
        ell=Fraction(-total, alpha),
    )


def spinc_enumerate(data: GeometricSeifertData) -> List[SpincIndex]:
    return [SpincIndex(k, j) for k in range(data.n) for j in range(data.alpha)]


def rho(data: GeometricSeifertData, idx: SpincIndex) -> Fraction:
    return Fraction(idx.k, data.n)


def gamma1(data: GeometricSeifertData, idx: SpincIndex) -> int:
    return idx.j % data.alpha


def gamma2(data: GeometricSeifertData, idx: SpincIndex) -> int:
    # canonical degree i = k-1 (minus) or -(k+1) (plus); gamma2 = i - j
    i = idx.k - 1 if data.sign == MINUS else -idx.k - 1
    return (i - idx.j) % data.alpha


def gammas(data: GeometricSeifertData, idx: SpincIndex) -> Tuple[int, int]:
    return gamma1(data, idx), gamma2(data, idx)


def _require_minus(data: GeometricSeifertData) -> None:
    if data.sign != MINUS:
        raise UnsupportedStructure("Chern-class labeling is only defined for the minus structure")


def chern_class(data: GeometricSeifertData, idx: SpincIndex) -> int:
    """First Chern class in ``Z_p``: ``q(k-1) - (q-1)j mod p``."""
    _require_minus(data)
    p, q = data.lens.p, data.lens.q
    return (q * (idx.k - 1) - (q - 1) * idx.j) % p


@lru_cache(maxsize=4096)
def _chern_table(data: GeometricSeifertData) -> Tuple[SpincIndex, ...]:
    table = [None] * data.lens.p
    for idx in spinc_enumerate(data):
        m = chern_class(data, idx)
        if table[m] is not None:
            raise AssertionError(f"Chern labeling not injective on {data.lens}")
        table[m] = idx
    return tuple(table)


def chern_inverse(data: GeometricSeifertData, m: int) -> SpincIndex:
    _require_minus(data)
    return _chern_table(data)[m % data.lens.p]


def chern_inverse_closed(data: GeometricSeifertData, m: int) -> SpincIndex:
    """Closed-form inverse of :func:`chern_class` (no table lookup).

    For ``n == 1`` this is ``(0, -omega2*m + omega1 mod p)``.  In general,
    writing the class as ``p - m'`` with ``m' = -m mod p``, the index is
    ``(r, (-m' - s*omega1) mod alpha)`` where ``n*s = (m'-1) + r`` and
    ``0 <= r < n``.
    """
    _require_minus(data)
    p, n, alpha = data.lens.p, data.n, data.alpha
    m %= p
    if n == 1:
        return SpincIndex(0, (-data.omega2 * m + data.omega1) % p)
    mp = (-m) % p
    r = (-(mp - 1)) % n
    s = (mp - 1 + r) // n
    return SpincIndex(r, (-mp - s * data.omega1) % alpha)


def iter_lens_spaces(p_max: int, p_min: int = 2) -> Iterator[LensSpace]:
    """All normalized ``L(p, q)`` with ``p_min <= p <= p_max``, sorted."""
    for p in range(max(p_min, 2), p_max + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield LensSpace(p, q)
