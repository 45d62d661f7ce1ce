"""Acceptance criteria, each at exact (zero-residual) tolerance.

Every criterion prints one ``[PASS]``/``[FAIL]`` line.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest, where the lines are
repeated in the terminal summary.
"""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction

from laxosp.export import BuildConfig, build_object, parse_json, to_json
from laxosp.graded import basis_info
from laxosp.qscalar import EvalPoint
from laxosp.sigma import build_vector_R, build_vector_RT, closed_form_sigma, sigma_table
from laxosp.vector_rep import check_defining_relations, vector_rep
from laxosp.verify import (
    check_appendix_relations,
    check_classical_limit,
    check_extra_qserre,
    check_fusion,
    check_intertwining,
    check_simple_values,
    check_ybe,
)

RESULTS: list[str] = []


def _report(number: int, title: str, ok: bool, seconds: float, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({seconds:.2f}s){' - ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)


def _all_pass(reports) -> tuple[bool, str]:
    bad = [r for r in reports if r.status != "pass"]
    return not bad, "; ".join(r.summary() for r in bad)


def test_criterion_01_defining_relations():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_defining_relations(n) for n in (2, 4)])
    dt = time.perf_counter() - t0
    ok = ok and dt < 10
    _report(1, "defining relations and q-Serre in pi, n=2,4", ok, dt, detail)
    assert ok


def test_criterion_02_simple_values():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_simple_values(n) for n in (2, 4, 6)])
    _report(2, "simple sigma-hat values in pi, n=2,4,6", ok, time.perf_counter() - t0, detail)
    assert ok


def test_criterion_03_recursion_vs_closed_form():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 4):
        t = basis_info(n)
        mats = sigma_table(n).evaluate(vector_rep(n))
        ok &= set(mats) == set(t.strict_pairs())
        ok &= all((mats[p] - closed_form_sigma(n, *p)).is_zero() for p in t.strict_pairs())
        ok &= mats[t.even(1), t.even(2)].is_zero()
        ok &= sigma_table(n).exprs[t.even(1), t.even(2)].is_zero()
    _report(3, "recursion table equals closed form, 2eps1 pair zero, n=2,4", ok, time.perf_counter() - t0)
    assert ok


def test_criterion_04_mode_agreement():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 4):
        ok &= build_vector_R(n, "closed-form") == build_vector_R(n, "recursion")
        ok &= build_vector_RT(n, "closed-form") == build_vector_RT(n, "dagger")
    _report(4, "R and R^T builders agree entrywise, n=2,4", ok, time.perf_counter() - t0)
    assert ok


def test_criterion_05_intertwining():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_intertwining(n) for n in (2, 4)])
    dt = time.perf_counter() - t0
    ok = ok and dt < 60
    _report(5, "R Delta(x) = Delta^T(x) R for e, f, q^(+-h/2), n=2,4", ok, dt, detail)
    assert ok


def test_criterion_06_ybe():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_ybe(n) for n in (2, 4)])
    sym = time.perf_counter() - t0
    t1 = time.perf_counter()
    ok6, detail6 = _all_pass([check_ybe(6, EvalPoint(qv)) for qv in (Fraction(3, 2), Fraction(4))])
    num = time.perf_counter() - t1
    ok = ok and ok6 and sym < 600 and num < 300
    _report(6, "graded YBE: symbolic n=2,4; n=6 at q=3/2 and q=4", ok, sym + num,
            "; ".join(x for x in (detail, detail6) if x))
    assert ok


def test_criterion_07_fusion():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_fusion(2), check_fusion(4, EvalPoint(Fraction(3, 2))),
                            check_fusion(4, EvalPoint(4))])
    _report(7, "fusion identities: symbolic n=2, exact rational q n=4", ok, time.perf_counter() - t0, detail)
    assert ok


def test_criterion_08_extra_qserre():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_extra_qserre(n) for n in (4, 6)])
    na = check_extra_qserre(2)
    ok = ok and na.status == "not-applicable"
    _report(8, "extra q-Serre n=4,6; not applicable at n=2", ok, time.perf_counter() - t0, detail)
    assert ok


def test_criterion_09_appendix_catalogue():
    t0 = time.perf_counter()
    reports = [check_appendix_relations(n) for n in (2, 4)]
    ok, detail = _all_pass(reports)
    # empty ranges must be reported as skipped, never as passed instances
    ok = ok and len(reports[0].skipped) == 10 and len(reports[1].skipped) == 2
    _report(9, "relation catalogue rows over all admissible indices, n=2,4", ok, time.perf_counter() - t0, detail)
    assert ok


def test_criterion_10_classical_limit():
    t0 = time.perf_counter()
    ok, detail = _all_pass([check_classical_limit(n) for n in (2, 4, 6)])
    _report(10, "R and R^T at q=1 are identities, n=2,4,6", ok, time.perf_counter() - t0, detail)
    assert ok


def test_criterion_11_cli_determinism_round_trip():
    t0 = time.perf_counter()
    ok = True
    for obj, mode in (("vector-R", "recursion"), ("vector-RT", "closed-form"), ("sigma-table", "recursion")):
        cmd = [sys.executable, "-m", "laxosp.cli", "build", "--n", "4", "--object", obj, "--mode", mode]
        runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
        ok &= runs[0] == runs[1]
        doc = parse_json(runs[0].decode())
        built = build_object(BuildConfig(n=4, object=obj, mode=mode))
        ok &= doc.matrix == built.matrix and doc.pairs == built.pairs
        ok &= to_json(doc).encode() == runs[0]
    _report(11, "CLI exports byte-identical and round-trip exactly", ok, time.perf_counter() - t0)
    assert ok


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
