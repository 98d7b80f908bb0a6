"""Exact integer/rational helpers.

Rationals are :class:`fractions.Fraction` throughout; it already keeps
lowest terms with a positive denominator, and ``str`` gives the
``"num/den"`` wire format.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import BadModulus, NotCoprime, ZeroDenominator

Rational = Fraction


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def normalize_mod(x: int, m: int) -> int:
    """Smallest nonnegative residue of ``x`` modulo ``m``."""
    if m < 1:
        raise BadModulus(f"modulus must be >= 1, got {m}")
    return x % m


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` in ``[0, m)``; returns 0 when ``m == 1``."""
    if m < 1:
        raise BadModulus(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ZeroDivisionError as exc:
            raise ZeroDenominator(x) from exc
    return Fraction(x)


def floor(x) -> int:
    return math.floor(as_rational(x))


def ceil(x) -> int:
    return -math.floor(-as_rational(x))


def frac(x) -> Fraction:
    """Fractional part, always in ``[0, 1)``."""
    x = as_rational(x)
    return x - math.floor(x)


def is_integer(x) -> bool:
    return as_rational(x).denominator == 1


def sign(x) -> int:
    return (x > 0) - (x < 0)


def rational_str(x) -> str:
    """Canonical ``"num/den"`` (or ``"num"``) rendering."""
    return str(as_rational(x))


def parse_rational(s: str) -> Fraction:
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational string: {s!r}")
    return as_rational(s)
