import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import laxosp.verify as verify
from laxosp.cli import main
from laxosp.export import BuildConfig, build_object, parse_json, to_dense_text, to_json
from laxosp.graded import GradedMatrix, basis_info
from laxosp.sigma import build_vector_R


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_vector_R_n2(capsys):
    code, out, _ = run(["build", "--n", "2", "--object", "vector-R", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["header"]["dim"] == 4 and doc["header"]["arity"] == 2
    first = doc["entries"][0]
    assert first == [1, 1, [[-2, 1, 1]]]
    assert all(1 <= r <= 16 and 1 <= c <= 16 for r, c, _ in doc["entries"])


@pytest.mark.parametrize("argv", [
    ["build", "--n", "3"],
    ["build", "--n", "0"],
    ["build", "--n", "x"],
    ["build", "--n", "2", "--object", "nope"],
    ["build", "--n", "2", "--at-q", "1"],
    ["build", "--n", "2", "--at-q", "-1"],
    ["build", "--n", "2", "--at-q", "0"],
    ["build", "--n", "2", "--at-q", "abc"],
    ["build", "--n", "2", "--object", "vector-R", "--mode", "dagger"],
    ["export-eval", "--n", "2"],
    ["export-eval", "--n", "2", "--at-q", "0"],
    ["verify", "--n", "2", "--checks", "bogus"],
    ["verify", "--n", "2", "--at-q", "1"],
    ["verify", "--n", "2", "--threads", "0"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "error" in err


def test_sigma_table_document(capsys):
    code, out, _ = run(["build", "--n", "2", "--object", "sigma-table"], capsys)
    assert code == 0
    pairs = json.loads(out)["pairs"]
    assert len(pairs) == 6
    t = basis_info(2)
    empty = [p for p in pairs if not p["entries"]]
    assert [(p["b"], p["a"]) for p in empty] == [(t.even(1), t.even(2))]


def test_sigma_table_modes_identical(capsys):
    _, a, _ = run(["build", "--n", "4", "--object", "sigma-table", "--mode", "closed-form"], capsys)
    _, b, _ = run(["build", "--n", "4", "--object", "sigma-table", "--mode", "recursion"], capsys)
    strip = lambda s: json.loads(s)["pairs"]
    assert strip(a) == strip(b)


def test_verify_exit_codes(capsys):
    code, out, _ = run(["verify", "--n", "2"], capsys)
    assert code == 0 and "all checks passed" in out
    code, out, _ = run(["verify", "--n", "4", "--checks", "serre-extra"], capsys)
    assert code == 0 and "[PASS] serre-extra" in out
    code, out, _ = run(["verify", "--n", "2", "--checks", "serre-extra"], capsys)
    assert code == 0 and "not applicable" in out
    code, out, _ = run(["verify", "--n", "4", "--checks", "ybe,fusion", "--at-q", "3/2", "--json"], capsys)
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["check"] for x in lines] == ["ybe", "fusion"]
    assert all(x["mode"] == "numeric q=3/2" for x in lines)


def test_verify_failure_exit_1(capsys, monkeypatch):
    def broken(n, point=None):
        rep = verify.VerificationReport("ybe", n)
        rep.record("forced", GradedMatrix.identity(basis_info(n)))
        return rep

    monkeypatch.setitem(verify.CHECKS, "ybe", broken)
    code, out, _ = run(["verify", "--n", "2", "--checks", "ybe"], capsys)
    assert code == 1 and "FAILED" in out and "first failure: forced" in out


def test_export_eval_classical_identity(capsys):
    code, out, _ = run(["export-eval", "--n", "2", "--object", "vector-R", "--at-q", "1"], capsys)
    assert code == 0
    entries = json.loads(out)["entries"]
    assert entries == [[i, i, [[0, 1, 1]]] for i in range(1, 17)]


def test_export_eval_at_s2_denominators(capsys):
    code, out, _ = run(["export-eval", "--n", "2", "--object", "vector-R", "--at-q", "4"], capsys)
    assert code == 0
    for _, _, triples in json.loads(out)["entries"]:
        for exp, num, den in triples:
            assert exp == 0
            assert den & (den - 1) == 0


def test_dense_text(capsys):
    code, out, _ = run(["build", "--n", "2", "--format", "dense-text"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# ") and len(lines) == 1 + 16
    assert lines[1].split("\t")[0] == "q^-1"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["build", "--n", "2", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert parse_json(target.read_text()).matrix == build_vector_R(2)


def test_byte_determinism_across_processes():
    cmd = [sys.executable, "-m", "laxosp.cli", "build", "--n", "4", "--object", "vector-RT", "--mode", "dagger"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True, env={"PYTHONHASHSEED": "123"}).stdout
    assert first == second and len(first) > 100


configs = st.builds(
    lambda n, obj_mode, q: BuildConfig(n=n, object=obj_mode[0], mode=obj_mode[1], at_q=q),
    st.sampled_from([2, 4]),
    st.sampled_from([("vector-R", "closed-form"), ("vector-R", "recursion"), ("vector-RT", "closed-form"),
                     ("vector-RT", "dagger"), ("vector-RT", "opposite-lax"), ("sigma-table", "closed-form"),
                     ("sigma-table", "recursion")]),
    st.one_of(st.none(), st.sampled_from([Fraction(3, 2), Fraction(4), Fraction(9, 4)])),
)


@settings(max_examples=25)
@given(configs)
def test_round_trip(cfg):
    doc = build_object(cfg)
    text = to_json(doc)
    back = parse_json(text)
    assert back.header == doc.header
    assert back.matrix == doc.matrix
    assert back.pairs == doc.pairs
    assert to_json(back) == text
    assert to_json(build_object(cfg)) == text
    assert to_dense_text(back) == to_dense_text(doc)


def test_entries_sorted_and_nonzero():
    doc = json.loads(to_json(build_object(BuildConfig(n=4))))
    keys = [(r, c) for r, c, _ in doc["entries"]]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(triples for _, _, triples in doc["entries"])


def test_build_config_validation():
    with pytest.raises(ValueError):
        BuildConfig(n=2, object="vector-R", mode="dagger")
    with pytest.raises(ValueError):
        BuildConfig(n=2, object="matrix")
