"""Reference data: published torsion tables and closed-form Froyshov families."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cycpoly import CycPoly

# (p, q) -> (common denominator, numerators of t^0 .. t^{p-1})
PRINTED_T_TABLES: Dict[Tuple[int, int], Tuple[int, List[int]]] = {
    (2, 1): (8, [1, -1]),
    (3, 1): (9, [1, -2, 1]),
    (3, 2): (9, [-1, 2, -1]),
    (4, 1): (16, [1, 3, 1, -5]),
    (4, 3): (16, [1, 3, 1, -5]),
    (5, 1): (5, [1, 0, -2, 0, 1]),
    (5, 2): (5, [-1, 1, 0, 1, -1]),
    (5, 3): (5, [-1, 1, 0, 1, -1]),
    (5, 4): (5, [0, -1, 2, -1, 0]),
    (6, 1): (72, [-5, 13, 19, 13, -5, -35]),
    (6, 5): (72, [5, -13, -19, -13, 5, 35]),
    (7, 1): (7, [2, 1, -1, -4, -1, 1, 2]),
    (7, 2): (7, [-2, 1, 0, 2, 0, 1, -2]),
    (7, 3): (7, [-1, 0, 2, -2, 2, 0, -1]),
    (7, 4): (7, [-2, 1, 0, 2, 0, 1, -2]),
    (7, 5): (7, [-1, 0, 2, -2, 2, 0, -1]),
    (7, 6): (7, [1, -2, -1, 4, -1, -2, 1]),
    (8, 1): (32, [-7, 3, 9, 11, 9, 3, -7, -21]),
    (8, 3): (32, [5, 7, -3, 7, 5, -9, -3, -9]),
    (8, 5): (32, [9, 3, 9, -5, -7, 3, -7, -5]),
    (8, 7): (32, [-9, -3, 7, -11, 7, -3, -9, 21]),
    (9, 1): (27, [10, 7, 1, -8, -20, -8, 1, 7, 10]),
    (9, 2): (27, [-10, 2, -1, 8, 2, 8, -1, 2, -10]),
    (9, 4): (27, [1, -2, -8, 10, -2, 10, -8, -2, 1]),
    (9, 5): (27, [-10, 2, -1, 8, 2, 8, -1, 2, -10]),
    (9, 7): (27, [-8, -2, 10, 1, -2, 1, 10, -2, -8]),
    (9, 8): (27, [8, -7, -10, -1, 20, -1, -10, -7, 8]),
    (10, 1): (40, [-15, -1, 9, 15, 17, 15, 9, -1, -15, -33]),
    (10, 3): (40, [-1, 1, -9, 9, 15, 9, -9, 1, -1, -15]),
    (10, 7): (40, [-9, 9, -1, 1, 15, 1, -1, 9, -9, -15]),
    (10, 9): (40, [-9, -15, 15, 1, -17, 1, 15, -15, -9, 33]),
}


def printed_table(p: int, q: int) -> CycPoly:
    den, nums = PRINTED_T_TABLES[(p, q)]
    return CycPoly(p, [Fraction(c, den) for c in nums])


def froyshov_family(p: int, q: int) -> Optional[Fraction]:
    """Closed form for ``Froy(L(p, q))`` when ``(p, q)`` lies in a tabulated family."""
    F = Fraction
    if q == 1:
        return F(1) if p % 2 == 0 else 1 - F(1, p)
    if q == p - 1:
        return F(p - 1)
    if q == 2 and p % 2 == 1:
        return F(2) if p % 4 == 3 else 2 - F(2, p)
    if q == 3 and p % 3:
        r, k = p % 6, (p + 2) // 6
        if r == 4:
            return F(3)
        if r == 5:
            return 2 - F(2 * k, 6 * k - 1)
        k = p // 6
        if r == 1:
            return 3 - F(3, p)
        return 2 - F(k + 1, 3 * k + 1)
    if q == 4 and p % 2:
        return {5: F(4), 7: F(2), 1: 4 - F(4, p), 3: 2 - F(4, p)}[p % 8]
    if q == 5 and p % 5:
        r = p % 10
        if r in (6, 7, 8, 9):
            k = (p + 4) // 10
            return {6: F(5), 7: 3 - F(4 * k - 1, 10 * k - 3),
                    8: 3 - F(2 * k, 5 * k - 1), 9: 2 - F(2 * k, 10 * k - 1)}[r]
        k = p // 10
        return {1: 5 - F(5, p), 2: 3 - F(2 * k + 2, 5 * k + 1),
                3: 3 - F(4 * k + 3, 10 * k + 3), 4: 2 - F(k + 2, 5 * k + 2)}[r]
    return None


def froyshov_square_family(m: int) -> Fraction:
    """``Froy(L(m^2, m+1))``."""
    if m % 2 == 0:
        return Fraction(m + 1)
    return m + 1 - Fraction(m + 1, m * m)


def theta_family(p: int, q: int) -> Optional[Fraction]:
    """Closed forms for the Elkies invariant of the canonical plumbing at ``q = 1, 2``."""
    if q == 1:
        return Fraction(1) if p % 2 == 0 else 1 - Fraction(1, p)
    if q == 2 and p % 2 == 1:
        return Fraction(2) if p % 4 == 3 else 2 - Fraction(2, p)
    return None
