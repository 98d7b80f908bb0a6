"""Command-line front end: ``python -m swlens <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .arith import rational_str
from .checks import SUITES, run_suite
from .conjectures import conjecture1_scan, conjecture2_scan
from .errors import SWLensError
from .plumbing import hj_expand, linear_plumbing_form, plumbing_record, theta_pq
from .seifert import make_lens
from .sw import casson_walker, compute, froyshov

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _fmt(x: Fraction) -> str:
    s = rational_str(x)
    if x.denominator == 1:
        return s
    return f"{s} ({float(x):.6g})"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _scalar(args, name: str, value: Fraction) -> str:
    L = make_lens(args.p, args.q)
    if args.format == "json":
        return _dump({"p": L.p, "q": L.q, name: rational_str(value)})
    return f"{name}({L}) = {_fmt(value)}"


def cmd_sw(args) -> int:
    res = compute(args.p, args.q)
    if args.format == "json":
        print(_dump(res.to_json()))
        return EXIT_OK
    print(f"{res.lens}")
    print(f"  SW  = {res.sw_poly}")
    print(f"  T   = {res.torsion_part}")
    print(f"  CW  = {_fmt(res.cw)}")
    print(f"  Froy = {_fmt(res.froyshov)}  attained at (k,j) in "
          f"{[idx.as_list() for idx in res.argmax_indices]}")
    print(f"  T(1-t)(1-t^q) = t^{res.torsion_shift} * 1hat")
    return EXIT_OK


def cmd_froyshov(args) -> int:
    print(_scalar(args, "froyshov", froyshov(make_lens(args.p, args.q))))
    return EXIT_OK


def cmd_cw(args) -> int:
    print(_scalar(args, "cw", casson_walker(make_lens(args.p, args.q))))
    return EXIT_OK


def cmd_elkies(args) -> int:
    L = make_lens(args.p, args.q)
    print(_scalar(args, "theta", theta_pq(L.p, L.q)))
    return EXIT_OK


def cmd_hj(args) -> int:
    cf = hj_expand(args.p, args.q)
    form = linear_plumbing_form(cf)
    if args.format == "json":
        if 1 <= args.q < args.p:
            print(_dump(plumbing_record(args.p, args.q)))
        else:
            print(_dump({"p": args.p, "q": args.q, "hj_weights": list(cf.weights),
                         "gram": form.to_json()}))
        return EXIT_OK
    print(f"{args.p}/{args.q} = <{', '.join(map(str, cf.weights))}>")
    print("gram:")
    width = max(len(str(v)) for row in form.gram for v in row)
    for row in form.gram:
        print("  [" + " ".join(str(v).rjust(width) for v in row) + "]")
    return EXIT_OK


def cmd_check(args) -> int:
    res = run_suite(args.suite, args.pmax)
    if args.format == "json":
        print(_dump({"suite": res.name, "ok": res.ok, "checked": res.checked,
                     "failures": res.failures, "notes": res.notes}))
    else:
        print(res.line())
        for f in res.failures[:20]:
            print("  " + ", ".join(f"{k}={v}" for k, v in f.items()))
    return EXIT_OK if res.ok else EXIT_FAIL


def _write_report(out: Optional[str], name: str, payload: dict) -> Path:
    out_dir = Path(out or "reports")
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(_dump(payload) + "\n")
    return path


def cmd_conjecture1(args) -> int:
    rep = conjecture1_scan(args.q, args.kmax, args.jobs)
    path = _write_report(args.out, f"conjecture1_q{args.q}_k{args.kmax}.json", rep.to_json())
    print(_dump(rep.to_json()) if args.format == "json" else rep.summary())
    print(f"report written to {path}", file=sys.stderr)
    return EXIT_OK


def cmd_conjecture2(args) -> int:
    rep = conjecture2_scan(args.pmax, args.jobs)
    path = _write_report(args.out, f"conjecture2_p{args.pmax}.json", rep.to_json())
    print(_dump(rep.to_json()) if args.format == "json" else rep.summary())
    print(f"report written to {path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="swlens", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("sw", cmd_sw, "SW polynomial, torsion part, CW and Froyshov invariants"),
        ("froyshov", cmd_froyshov, "Froyshov invariant"),
        ("elkies", cmd_elkies, "Elkies invariant of the canonical plumbing"),
        ("hj", cmd_hj, "Hirzebruch-Jung weights and plumbing Gram matrix"),
        ("cw", cmd_cw, "Casson-Walker invariant"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--pmax", type=int, default=None)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("conjecture1", parents=[common], help="residue-family scan for fixed q")
    sp.add_argument("q", type=int)
    sp.add_argument("--kmax", type=int, default=10)
    sp.add_argument("--out", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_conjecture1)

    sp = sub.add_parser("conjecture2", parents=[common], help="compare Elkies and Froyshov")
    sp.add_argument("--pmax", type=int, default=30)
    sp.add_argument("--out", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_conjecture2)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SWLensError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
