"""Exact arithmetic in the group algebra Q[Z_p].

Elements are dense coefficient tuples indexed by the exponent of the
generator ``t`` (``t**p == 1``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .arith import as_rational
from .dedekind import sawtooth
from .errors import BadModulus, ModulusMismatch


@dataclass(frozen=True)
class CycPoly:
    p: int
    coeffs: tuple

    def __post_init__(self):
        if self.p < 1:
            raise BadModulus(f"p must be >= 1, got {self.p}")
        cs = tuple(as_rational(c) for c in self.coeffs)
        if len(cs) != self.p:
            raise ValueError(f"expected {self.p} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    # constructors
    @classmethod
    def zero(cls, p: int) -> "CycPoly":
        return cls(p, (Fraction(0),) * p)

    @classmethod
    def monomial(cls, p: int, exponent: int, coeff=1) -> "CycPoly":
        cs = [Fraction(0)] * p
        cs[exponent % p] = as_rational(coeff)
        return cls(p, cs)

    @classmethod
    def from_terms(cls, p: int, terms: Iterable) -> "CycPoly":
        """Build from ``(exponent, coeff)`` pairs; exponents reduce mod ``p``."""
        cs = [Fraction(0)] * p
        for e, c in terms:
            cs[e % p] += as_rational(c)
        return cls(p, cs)

    def _check(self, other: "CycPoly") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"Q[Z_{self.p}] vs Q[Z_{other.p}]")

    def _coerce(self, other) -> "CycPoly":
        if isinstance(other, CycPoly):
            self._check(other)
            return other
        return CycPoly.monomial(self.p, 0, other)

    # ring operations
    def __add__(self, other) -> "CycPoly":
        other = self._coerce(other)
        return CycPoly(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycPoly":
        if not isinstance(other, CycPoly):
            c = as_rational(other)
            return CycPoly(self.p, tuple(c * a for a in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def shift(self, n: int) -> "CycPoly":
        """Multiply by ``t**n``."""
        p = self.p
        cs = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            cs[(i + n) % p] = a
        return CycPoly(p, cs)

    # rendering
    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycPoly":
        return cls(int(obj["p"]), [Fraction(c) for c in obj["coeffs"]])


def mul(a: CycPoly, b: CycPoly) -> CycPoly:
    """Cyclic convolution."""
    a._check(b)
    p = a.p
    cs = [Fraction(0)] * p
    nz = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in nz:
            cs[(i + j) % p] += x * y
    return CycPoly(p, cs)


def substitute(a: CycPoly, m: int) -> CycPoly:
    """``a(t**m)``: the coefficient of ``t**j`` moves onto ``t**(j*m mod p)``."""
    p = a.p
    cs = [Fraction(0)] * p
    for j, c in enumerate(a.coeffs):
        cs[(j * m) % p] += c
    return CycPoly(p, cs)


def aug(a: CycPoly) -> Fraction:
    return sum(a.coeffs, Fraction(0))


def sigma(p: int) -> CycPoly:
    return CycPoly(p, (Fraction(1),) * p)


def one_hat(p: int) -> CycPoly:
    return CycPoly.monomial(p, 0) - sigma(p) * Fraction(1, p)


def proj(a: CycPoly) -> CycPoly:
    """Project onto the augmentation ideal."""
    return a - sigma(a.p) * (aug(a) / a.p)


def involution(a: CycPoly) -> CycPoly:
    return substitute(a, -1)


def f_poly(p: int) -> CycPoly:
    """``f(t) = sum_j ((j/p)) t**j``."""
    return CycPoly(p, [sawtooth(Fraction(j, p)) for j in range(p)])


def translate_equiv(a: CycPoly, b: CycPoly) -> Optional[int]:
    """Least ``n`` in ``[0, p)`` with ``a == t**n * b``, or ``None``."""
    a._check(b)
    p = a.p
    ac, bc = a.coeffs, b.coeffs
    for n in range(p):
        if all(ac[(i + n) % p] == bc[i] for i in range(p)):
            return n
    return None
