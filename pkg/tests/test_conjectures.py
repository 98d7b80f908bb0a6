from fractions import Fraction

import pytest

from swlens.conjectures import (Conjecture1Config, Conjecture2Config, conjecture1_scan,
                                conjecture2_scan, residues)

Q = Fraction


def fam(report, u):
    return next(f for f in report.families if f.u == u)


def test_residues():
    assert residues(3) == [1, 2, 4, 5]
    assert residues(4) == [1, 3, 5, 7]


def test_q2_fit_reproduces_closed_form():
    rep = conjecture1_scan(2, 6)
    f = fam(rep, 1)
    # 2 - 2/p with p = 4k + 1 is 8k / (4k + 1)
    assert (f.A, f.B, f.conforming) == (8, 0, True)
    assert fam(rep, 3).A * 1 + fam(rep, 3).B == 2 * 7


def test_q3_families():
    rep = conjecture1_scan(3, 8)
    assert rep.proved_ok()
    for f in rep.families:
        for k, v in f.values.items():
            p = f.u + 6 * k
            expected = {4: Q(3), 5: 2 - Q((p + 1) // 6 * 2, p), 1: 3 - Q(3, p),
                        2: 2 - Q(p // 6 + 1, 3 * (p // 6) + 1)}[p % 6]
            assert v == expected


def test_q5_family_10k_plus_1():
    rep = conjecture1_scan(5, 5)
    f = fam(rep, 1)
    assert (f.A, f.B) == (50, 0)
    assert all(v == 5 - Q(5, 1 + 10 * k) for k, v in f.values.items())


def test_bound_and_family_b_reporting():
    rep = conjecture1_scan(4, 4)
    assert rep.bound_violations == []
    assert rep.bound_checked > 0
    # the printed q-1 value is contradicted by the tables, reported with witnesses
    assert not rep.family_b_holds
    row = rep.family_b[0]
    assert (row["p"], row["q"], row["froyshov"], row["expected"]) == (5, 4, "4", "3")


def test_scan_json_is_deterministic():
    a = conjecture1_scan(3, 4).to_json()
    b = conjecture1_scan(Conjecture1Config(3, 4, jobs=2)).to_json()
    assert a == b


def test_config_validation():
    with pytest.raises(ValueError):
        Conjecture1Config(1, 5)
    with pytest.raises(ValueError):
        Conjecture1Config(3, 2)
    with pytest.raises(ValueError):
        Conjecture2Config(2)


def test_conjecture2_small():
    rep = conjecture2_scan(20)
    assert rep.proved_ok()
    rows = {(r.p, r.q): r for r in rep.rows}
    assert rows[(7, 3)].froyshov == 3 - Q(3, 7)
    assert rows[(7, 3)].theta_pq == rows[(7, 3)].froyshov
    assert all(r.equal for r in rep.rows if r.q in (1, 2))
    js = rep.to_json()
    assert js["proved_cases_ok"] is True
    assert list(js["rows"][0]) == ["p", "q", "theta_pq", "froyshov", "equal"]


def test_conjecture2_parallel_matches_serial():
    assert conjecture2_scan(14).to_json() == conjecture2_scan(Conjecture2Config(14, jobs=2)).to_json()
