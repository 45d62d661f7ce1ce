"""Time the graded Yang-Baxter check, symbolic against exact numeric, as n grows.

    python3 scripts/ybe_timing.py --max-n 10
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from laxosp.qscalar import EvalPoint
from laxosp.sigma import build_vector_R
from laxosp.verify import check_ybe


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--q", default="3/2")
    args = ap.parse_args()
    point = EvalPoint(Fraction(args.q))
    print(f"{'n':>3} {'dim^3':>7} {'nnz(R)':>7} {'symbolic s':>11} {'numeric s':>10}")
    ok = True
    for n in range(2, args.max_n + 1, 2):
        sym = check_ybe(n)
        num = check_ybe(n, point)
        ok &= sym.passed and num.passed
        dim = n + 2
        print(f"{n:>3} {dim ** 3:>7} {build_vector_R(n).nnz():>7} {sym.seconds:>11.3f} {num.seconds:>10.3f}"
              f"  {sym.status}/{num.status}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
