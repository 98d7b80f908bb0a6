"""Print Froyshov invariants of L(p, q) grouped by q, with closed-form flags."""
import argparse
from dataclasses import dataclass

from swlens.arith import gcd
from swlens.fixtures import froyshov_family
from swlens.seifert import LensSpace
from swlens.sw import froyshov_with_argmax


@dataclass
class TableConfig:
    q_max: int = 5
    p_max: int = 40


def main(cfg: TableConfig) -> None:
    for q in range(1, cfg.q_max + 1):
        print(f"q = {q}")
        for p in range(q + 1, cfg.p_max + 1):
            if gcd(p, q) != 1:
                continue
            val, argmax = froyshov_with_argmax(LensSpace(p, q))
            closed = froyshov_family(p, q)
            flag = "" if closed is None else ("  [closed form ok]" if closed == val else "  [MISMATCH]")
            print(f"  L({p},{q}): {str(val):>10}  argmax {[i.as_list() for i in argmax]}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmax", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=40)
    a = ap.parse_args()
    main(TableConfig(a.qmax, a.pmax))
