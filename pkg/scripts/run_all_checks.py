"""Run every verification check over a range of n and write a JSON summary.

    python3 scripts/run_all_checks.py --n 2 4 6 --at-q 3/2 --out results.json
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from laxosp.qscalar import EvalPoint
from laxosp.verify import CHECKS, check_pivot_independence, run_checks


@dataclass
class SweepConfig:
    ns: list[int] = field(default_factory=lambda: [2, 4, 6])
    at_q: str | None = None
    threads: int = 1
    out: str | None = None


def sweep(cfg: SweepConfig) -> list[dict]:
    point = None if cfg.at_q is None else EvalPoint(Fraction(cfg.at_q))
    rows = []
    for n in cfg.ns:
        reports = run_checks(n, list(CHECKS), point, threads=cfg.threads)
        reports.append(check_pivot_independence(n, point))
        for rep in reports:
            print(rep.summary())
            rows.append(rep.to_dict() | {"seconds": round(rep.seconds, 4)})
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[2, 4, 6])
    ap.add_argument("--at-q")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = SweepConfig(ns=args.n, at_q=args.at_q, threads=args.threads, out=args.out)
    rows = sweep(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": rows}, fh, indent=1, sort_keys=True)
    return 0 if all(r["status"] != "fail" for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
