"""Sawtooth function and Dedekind-Rademacher sums.

Two evaluators are provided for ``s(beta, alpha; x, y)``: a term-by-term
sum over ``r = 1..alpha`` (the oracle) and a Euclid-style evaluator that
alternates the shift law with reciprocity and runs in logarithmic depth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq

from .arith import as_rational, frac
from .errors import BadModulus, NotCoprime

_HALF = Fraction(1, 2)
_ZERO_Q, _HALF_Q, _QUARTER_Q, _SIXTH_Q = mpq(0), mpq(1, 2), mpq(1, 4), mpq(1, 6)

# Toggle for the memo cache on the fast evaluator; results must not depend on it.
USE_CACHE = True


def sawtooth(x) -> Fraction:
    """((x)): zero at integers, ``{x} - 1/2`` elsewhere."""
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - _HALF


def bernoulli_psi2(x) -> Fraction:
    """Periodic second Bernoulli function ``B_2({x})``."""
    z = frac(x)
    return z * z - z + Fraction(1, 6)


@dataclass(frozen=True)
class RademacherArgs:
    beta: int
    alpha: int
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    def __post_init__(self):
        if self.alpha < 1:
            raise BadModulus(f"alpha must be >= 1, got {self.alpha}")
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))


def _args(args_or_beta, alpha=None, x=0, y=0) -> RademacherArgs:
    if isinstance(args_or_beta, RademacherArgs):
        return args_or_beta
    return RademacherArgs(args_or_beta, alpha, as_rational(x), as_rational(y))


def dr_sum_brute(args_or_beta, alpha=None, x=0, y=0) -> Fraction:
    """Evaluate the defining double-sawtooth sum term by term.

    Each sawtooth value is computed from an integer numerator over a fixed
    denominator, so the loop runs in plain integer arithmetic.
    """
    a = _args(args_or_beta, alpha, x, y)
    beta, al = a.beta, a.alpha
    xn, xd = a.x.numerator, a.x.denominator
    yn, yd = a.y.numerator, a.y.denominator
    d2 = yd * al            # (r + y)/alpha = (r*yd + yn) / d2
    d1 = xd * d2            # x + beta*(r + y)/alpha = n1 / d1
    total = 0
    for r in range(1, al + 1):
        n2 = r * yd + yn
        m2 = n2 % d2
        if not m2:
            continue
        m1 = (xn * d2 + beta * n2 * xd) % d1
        if not m1:
            continue
        total += (2 * m1 - d1) * (2 * m2 - d2)
    return Fraction(total, 4 * d1 * d2)


def reciprocity_rhs(beta: int, alpha: int, x, y) -> Fraction:
    """Right-hand side of ``s(beta,alpha;x,y) + s(alpha,beta;y,x)``."""
    x, y = as_rational(x), as_rational(y)
    if x.denominator == 1 and y.denominator == 1:
        return Fraction(-1, 4) + Fraction(alpha * alpha + beta * beta + 1, 12 * alpha * beta)
    num = (beta * beta * bernoulli_psi2(y)
           + bernoulli_psi2(beta * y + alpha * x)
           + alpha * alpha * bernoulli_psi2(x))
    return sawtooth(x) * sawtooth(y) + num / (2 * alpha * beta)


def _saw_q(x):
    if x.denominator == 1:
        return _ZERO_Q
    return x - gmpy2.floor(x) - _HALF_Q


def _psi2_q(x):
    z = x - gmpy2.floor(x)
    return z * z - z + _SIXTH_Q


def _fast(beta: int, alpha: int, x: Fraction, y: Fraction) -> Fraction:
    # gmpy2 rationals on the hot path; converted back to Fraction on exit
    x, y = mpq(x.numerator, x.denominator), mpq(y.numerator, y.denominator)
    total = _ZERO_Q
    sgn = 1
    while True:
        if alpha == 1:
            total += sgn * _saw_q(beta * y + x) * _saw_q(y)
            return Fraction(int(total.numerator), int(total.denominator))
        m = beta // alpha
        beta, x = beta - m * alpha, x + m * y
        if beta == 0 or math.gcd(beta, alpha) != 1:
            raise NotCoprime(f"gcd({beta}, {alpha}) != 1")
        # s(b,a;x,y) = R(b,a;x,y) - s(a,b;y,x)
        if x.denominator == 1 and y.denominator == 1:
            rhs = mpq(alpha * alpha + beta * beta + 1, 12 * alpha * beta) - _QUARTER_Q
        else:
            rhs = _saw_q(x) * _saw_q(y) + (
                beta * beta * _psi2_q(y) + _psi2_q(beta * y + alpha * x)
                + alpha * alpha * _psi2_q(x)) / (2 * alpha * beta)
        total += sgn * rhs
        sgn = -sgn
        beta, alpha, x, y = alpha, beta, y, x


_fast_cached = lru_cache(maxsize=1 << 16)(_fast)


def dr_sum_fast(args_or_beta, alpha=None, x=0, y=0) -> Fraction:
    """Reciprocity-based evaluation of ``s(beta, alpha; x, y)``.

    ``beta`` may be any integer coprime to ``alpha``; it is first reduced
    into ``[0, alpha)`` through the shift law.
    """
    if isinstance(args_or_beta, RademacherArgs):
        beta, alpha, x, y = args_or_beta.beta, args_or_beta.alpha, args_or_beta.x, args_or_beta.y
    else:
        beta = args_or_beta
        if alpha is None or alpha < 1:
            raise BadModulus(f"alpha must be >= 1, got {alpha}")
        x = x if isinstance(x, Fraction) else as_rational(x)
        y = y if isinstance(y, Fraction) else as_rational(y)
    if alpha > 1 and math.gcd(beta % alpha, alpha) != 1:
        raise NotCoprime(f"gcd({beta} mod {alpha}, {alpha}) != 1")
    fn = _fast_cached if USE_CACHE else _fast
    return fn(beta, alpha, x, y)


def dedekind_sum(q: int, p: int) -> Fraction:
    """Classical Dedekind sum ``s(q, p)``."""
    if p < 1:
        raise BadModulus(f"p must be >= 1, got {p}")
    if math.gcd(q, p) != 1:
        raise NotCoprime(f"gcd({q}, {p}) != 1")
    return dr_sum_fast(q, p, 0, 0)


def clear_cache() -> None:
    _fast_cached.cache_clear()


def dr_sum_reflected(beta: int, alpha: int, x=0, y=0) -> Fraction:
    """``s(beta, alpha; x, y)`` computed as ``-s(-beta, alpha; -x, y)``."""
    return -dr_sum_fast(-beta, alpha, -as_rational(x), as_rational(y))
