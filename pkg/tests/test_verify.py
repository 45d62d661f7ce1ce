from fractions import Fraction

import pytest

from laxosp.graded import basis_info, elem_matrix, gtensor
from laxosp.qscalar import EvalPoint, q_power
from laxosp.report import VerificationReport
from laxosp.sigma import build_vector_R, sigma_table
from laxosp.verify import (
    CHECKS,
    INDUCTION_ROWS,
    QCOMMUTATION_ROWS,
    appendix_row_numbers,
    check_appendix_relations,
    check_classical_limit,
    check_extra_qserre,
    check_fusion,
    check_intertwining,
    check_mode_agreement,
    check_pivot_independence,
    check_recursion_closed_form,
    check_simple_values,
    check_ybe,
    leg_embeddings,
    qcommutation_instances,
    run_checks,
)
from laxosp.vector_rep import vector_rep


@pytest.mark.parametrize("name", sorted(CHECKS))
@pytest.mark.parametrize("n", [2, 4])
def test_every_check_passes_symbolically(name, n):
    rep = CHECKS[name](n)
    assert rep.passed, rep.summary()
    if rep.status == "pass":
        assert rep.instances > 0


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_every_check_passes_numerically(name):
    rep = CHECKS[name](4, EvalPoint(Fraction(3, 2)))
    assert rep.passed, rep.summary()


def test_intertwining_n2_covers_all_generators():
    rep = check_intertwining(2)
    assert rep.status == "pass" and rep.instances == 2 * 4


def test_ybe_numeric_n6():
    for qv in (Fraction(3, 2), Fraction(4)):
        assert check_ybe(6, EvalPoint(qv)).status == "pass"


def test_fusion_n4_both_modes():
    assert check_fusion(4).status == "pass"
    assert check_fusion(4, EvalPoint(Fraction(5, 3))).status == "pass"


def test_classical_limit():
    for n in (2, 4, 6):
        assert check_classical_limit(n).status == "pass"


def test_extra_qserre():
    na = check_extra_qserre(2)
    assert na.status == "not-applicable" and na.passed and na.instances == 0
    for n in (4, 6):
        rep = check_extra_qserre(n)
        assert rep.status == "pass" and rep.instances == 3
        assert "all three sides nonzero" in rep.notes


def test_appendix_skips_empty_rows_n2():
    rep = check_appendix_relations(2)
    assert rep.status == "pass"
    skipped = sorted(int(s.split()[1]) for s in rep.skipped)
    assert skipped == [1, 2, 3, 4, 5, 6, 7, 8, 13, 15]


def test_appendix_n4_no_rows_passed_vacuously():
    rep = check_appendix_relations(4)
    assert rep.status == "pass"
    assert sorted(rep.skipped) == ["row 1", "row 2"]


def test_appendix_row_catalogue_complete():
    assert appendix_row_numbers() == list(range(1, 18))


def test_row9_as_tabulated_fails():
    t = basis_info(4)
    mats = sigma_table(4).evaluate(vector_rep(4))
    row9 = next(r for r in INDUCTION_ROWS if r.row == 9)
    assert row9.erratum
    for b, c, a, x, _ in row9.instances(t):
        literal = (mats[b, c] @ mats[c, a]) * x + mats[c, a] @ mats[b, c]
        assert not (mats[b, a] - literal).is_zero()


@pytest.mark.parametrize("n", [2, 4, 6])
def test_qcommutation_rows_subsumed(n):
    t = basis_info(n)
    for row in QCOMMUTATION_ROWS:
        if row.row == 6:
            for mu in range(1, t.k):
                assert sorted(row.pairs(t, mu)) == sorted(qcommutation_instances(n, f"a{mu}"))
        else:
            assert sorted(row.pairs(t)) == sorted(qcommutation_instances(n, row.root(t)))


def test_component_checks():
    for n in (2, 4, 6):
        assert check_simple_values(n).status == "pass"
        assert check_recursion_closed_form(n).status == "pass"
        assert check_pivot_independence(n).status == "pass"
        assert check_mode_agreement(n).status == "pass"


def _perturbed_R(n):
    t = basis_info(n)
    return build_vector_R(n) + gtensor(elem_matrix(t, 1, 2), elem_matrix(t, 2, 1)) * q_power(1)


@pytest.mark.parametrize("point", [None, EvalPoint(4), EvalPoint(Fraction(3, 2))])
def test_ybe_detects_perturbation(point):
    R = _perturbed_R(2)
    if point is not None:
        R = R.at(point)
    R12, R13, R23 = leg_embeddings(R)
    residual = R12 @ R13 @ R23 - R23 @ R13 @ R12
    if point is not None:
        residual = residual.at(point)
    assert not residual.is_zero()


def test_report_records_first_failure():
    rep = VerificationReport("demo", 2)
    t = basis_info(2)
    rep.record("ok", elem_matrix(t, 1, 1) - elem_matrix(t, 1, 1))
    rep.record("bad", elem_matrix(t, 2, 3) * 5)
    rep.record("worse", elem_matrix(t, 1, 1))
    assert rep.status == "fail" and not rep.passed
    assert rep.first_failure == "bad"
    r, c, v = rep.residual
    assert (r, c) == (1, 2) and v == q_power(0) * 5
    assert "first failure: bad" in rep.summary()
    d = rep.to_dict()
    assert d["residual"] == [1, 2, [[0, 5, 1]]] and d["instances"] == 3


def test_run_checks_order_and_threads():
    names = ["ybe", "defining", "serre-extra"]
    serial = run_checks(4, names)
    threaded = run_checks(4, names, threads=3)
    assert [r.check for r in serial] == names == [r.check for r in threaded]
    assert [r.status for r in serial] == [r.status for r in threaded]
    with pytest.raises(KeyError):
        run_checks(2, ["nope"])
