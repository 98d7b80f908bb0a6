"""Continued fractions, linear plumbings and the Elkies invariant.

The Elkies invariant of a negative definite form ``G`` is
``rank + max v^T G^{-1} v`` over characteristic ``v``, i.e. over the coset
``v0 + 2Z^rank`` where ``v0 = diag(G) mod 2``.  The maximum is found by
exact Fincke-Pohst enumeration on ``-G^{-1}``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .arith import ceil, gcd, sign
from .errors import NotCoprime, NotNegativeDefinite, ZeroDenominator


@dataclass(frozen=True)
class ContinuedFraction:
    weights: Tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise ValueError("continued fraction needs at least one weight")
        if w[-1] == 0:
            raise ZeroDenominator("last weight must be nonzero")
        object.__setattr__(self, "weights", w)


def cf_eval(cf) -> Fraction:
    """Value of ``n1 - 1/(n2 - 1/(... - 1/nk))``."""
    weights = cf.weights if isinstance(cf, ContinuedFraction) else tuple(cf)
    val = Fraction(weights[-1])
    for w in reversed(weights[:-1]):
        if val == 0:
            raise ZeroDenominator(f"zero intermediate denominator in {list(weights)}")
        val = w - 1 / val
    return val


def hj_expand(p: int, q: int) -> ContinuedFraction:
    """Hirzebruch-Jung expansion ``p/q = <w1, ..., wk>``.

    Each weight carries the sign of ``q`` and has absolute value equal to
    the ceiling of the absolute value of the remaining tail.
    """
    if q == 0:
        raise ZeroDenominator("q must be nonzero")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    s = sign(q)
    x = Fraction(p, q)
    weights = []
    while True:
        w = s * ceil(abs(x))
        weights.append(w)
        if x == w:
            break
        x = 1 / (w - x)
        if len(weights) > 10 * (abs(p) + abs(q)) + 10:
            raise ValueError(f"expansion of {p}/{q} does not terminate")
    return ContinuedFraction(tuple(weights))


@dataclass(frozen=True)
class IntersectionForm:
    gram: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        g = tuple(tuple(int(v) for v in row) for row in self.gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def direct_sum(self, other: "IntersectionForm") -> "IntersectionForm":
        n, m = self.rank, other.rank
        rows = [list(r) + [0] * m for r in self.gram]
        rows += [[0] * n + list(r) for r in other.gram]
        return IntersectionForm(rows)

    def determinant(self) -> int:
        return int(_det(_to_frac(self.gram)))

    def inverse(self) -> List[List[Fraction]]:
        return _inverse(_to_frac(self.gram))

    def characteristic_base(self) -> Tuple[int, ...]:
        return tuple(self.gram[i][i] % 2 for i in range(self.rank))

    def to_json(self) -> list:
        return [list(r) for r in self.gram]


def _to_frac(m) -> List[List[Fraction]]:
    return [[Fraction(v) for v in row] for row in m]


def _det(a: List[List[Fraction]]) -> Fraction:
    a = [row[:] for row in a]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def _inverse(a: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def linear_plumbing_form(cf) -> IntersectionForm:
    """Tridiagonal Gram matrix of the chain ``-w1 - ... - -wk``."""
    weights = cf.weights if isinstance(cf, ContinuedFraction) else tuple(cf)
    k = len(weights)
    rows = [[0] * k for _ in range(k)]
    for i, w in enumerate(weights):
        rows[i][i] = -w
        if i + 1 < k:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return IntersectionForm(rows)


def is_negative_definite(form: IntersectionForm) -> bool:
    """Sylvester's criterion on leading principal minors, exactly."""
    g = _to_frac(form.gram)
    for i in range(1, form.rank + 1):
        minor = _det([row[:i] for row in g[:i]])
        if (-1) ** i * minor <= 0:
            return False
    return True


def _ldl(m: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """``m = U^T diag(d) U`` with ``U`` unit upper triangular."""
    n = len(m)
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = m[i][i] - sum((u[k][i] ** 2 * d[k] for k in range(i)), Fraction(0))
        for j in range(i + 1, n):
            u[i][j] = (m[i][j] - sum((u[k][i] * u[k][j] * d[k] for k in range(i)), Fraction(0))) / d[i]
    return u, d


def _min_coset_norm(m: List[List[Fraction]], v0: Sequence[int]) -> Tuple[Fraction, Tuple[int, ...]]:
    """Minimum of ``v^T m v`` over ``v in v0 + 2Z^n`` for positive definite ``m``."""
    n = len(m)
    u, d = _ldl(m)
    # v = 2y with y in c + Z^n, c = v0/2; Q(v) = 4 * sum_i d_i (y_i + sum_{j>i} u_ij y_j)^2
    c = [Fraction(x, 2) for x in v0]
    y = c[:]
    best = 4 * sum((d[i] * (y[i] + sum((u[i][j] * y[j] for j in range(i + 1, n)), Fraction(0))) ** 2
                    for i in range(n)), Fraction(0))
    best_v = tuple(v0)
    bound = best / 4
    cur = [Fraction(0)] * n

    def search(i: int, partial: Fraction):
        nonlocal bound, best_v
        if i < 0:
            if partial < bound:
                bound = partial
                best_v = tuple(int(2 * t) for t in cur)
            return
        center = -sum((u[i][j] * cur[j] for j in range(i + 1, n)), Fraction(0))
        # y_i = c_i + w, w integer; minimize |y_i - center|
        w0 = round(center - c[i])
        for step in itertools.count():
            hit = False
            for w in ((w0,) if step == 0 else (w0 + step, w0 - step)):
                yi = c[i] + w
                term = partial + d[i] * (yi - center) ** 2
                if term <= bound:
                    hit = True
                    cur[i] = yi
                    search(i - 1, term)
            if not hit and step > 0:
                break
            if step == 0 and not hit:
                # nearest candidate already too far, so every other one is
                break

    search(n - 1, Fraction(0))
    return 4 * bound, best_v


def elkies_theta(form: IntersectionForm) -> Fraction:
    if not is_negative_definite(form):
        raise NotNegativeDefinite("Elkies invariant needs a negative definite form")
    v0 = form.characteristic_base()
    if not any(v0):
        return Fraction(form.rank)
    neg_inv = [[-x for x in row] for row in form.inverse()]
    norm, _ = _min_coset_norm(neg_inv, v0)
    return form.rank - norm


def elkies_theta_brute(form: IntersectionForm, radius: int = 10) -> Fraction:
    """Exhaustive search over characteristic vectors with entries in ``[-radius, radius]``."""
    inv = form.inverse()
    v0 = form.characteristic_base()
    ranges = [[x for x in range(-radius, radius + 1) if (x - b) % 2 == 0] for b in v0]
    best = None
    for v in itertools.product(*ranges):
        val = sum((v[i] * inv[i][j] * v[j] for i in range(len(v)) for j in range(len(v))), Fraction(0))
        if best is None or val > best:
            best = val
    return form.rank + best


def theta_pq(p: int, q: int) -> Fraction:
    """Elkies invariant of the canonical Hirzebruch-Jung plumbing of ``L(p, q)``."""
    if not 1 <= q < p or gcd(p, q) != 1:
        raise NotCoprime(f"need gcd(p, q) = 1 and 1 <= q < p, got ({p}, {q})")
    return elkies_theta(linear_plumbing_form(hj_expand(p, q)))


def plumbing_record(p: int, q: int) -> dict:
    cf = hj_expand(p, q)
    form = linear_plumbing_form(cf)
    return {
        "p": p,
        "q": q,
        "hj_weights": list(cf.weights),
        "gram": form.to_json(),
        "theta": str(theta_pq(p, q)),
    }
