"""Run both conjecture scans and write JSON reports plus a text summary."""
import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from swlens.conjectures import conjecture1_scan, conjecture2_scan


@dataclass
class ScanConfig:
    q_min: int = 2
    q_max: int = 8
    k_max: int = 10
    p_max: int = 60
    jobs: int = 1
    out: Path = Path("reports")


def main(cfg: ScanConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for q in range(cfg.q_min, cfg.q_max + 1):
        rep = conjecture1_scan(q, cfg.k_max, cfg.jobs)
        (cfg.out / f"conjecture1_q{q}_k{cfg.k_max}.json").write_text(
            json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")
        print(rep.summary(), end="\n\n")
    rep = conjecture2_scan(cfg.p_max, cfg.jobs)
    (cfg.out / f"conjecture2_p{cfg.p_max}.json").write_text(
        json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")
    print(rep.summary())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmin", type=int, default=2)
    ap.add_argument("--qmax", type=int, default=8)
    ap.add_argument("--kmax", type=int, default=10)
    ap.add_argument("--pmax", type=int, default=60)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("reports"))
    a = ap.parse_args()
    main(ScanConfig(a.qmin, a.qmax, a.kmax, a.pmax, a.jobs, a.out))
