import io
import json

import pytest

from twconj.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_spectrum_of_cyclic_three():
    code, out, _ = call("spectrum", "cyclic:3")
    assert code == 0
    assert json.loads(out)["spectrum"] == [1, 3]


def test_spectrum_table_and_csv():
    code, out, _ = call("spectrum", "S3", "--format", "table")
    assert code == 0 and "reidemeister_number" in out
    code, out, _ = call("--format", "csv", "spectrum", "Q8")
    assert out.splitlines() == ["reidemeister_number,automorphisms", "2,8", "3,12", "5,4"]  # counts from the oracle


def test_group_info(tmp_path):
    code, out, _ = call("group", "info", "A4", "--aut")
    info = json.loads(out)
    assert code == 0 and info["order"] == 12 and info["automorphisms"] == 24
    assert info["conjugacy_classes"] == 4


def test_bad_table_exits_two(tmp_path):
    path = tmp_path / "badtable.json"
    path.write_text(json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 0]]}))
    code, out, err = call("group", "info", str(path))
    assert code == 2
    assert "NotAssociative" in err
    assert out == ""


@pytest.mark.parametrize("argv", [
    ("spectrum",), ("verify", "no-such-lemma"), ("verify", "jabara", "--samples", "0"),
    ("spectrum", "S9"), ("frobnicate",), ("reidemeister", "S3", "--endo", '{"kind": "wat"}'),
    ("reidemeister", "Z4", "--endo", '{"map": [0, 2, 1, 3]}'),
    ("group", "info", "/nonexistent/group.json"),
])
def test_usage_errors_exit_two(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_reidemeister_inner():
    code, out, _ = call("reidemeister", "S3", "--endo", '{"kind": "inner", "element": 1}', "--stabilizer", "0")
    data = json.loads(out)
    assert code == 0 and data["reidemeister_number"] == 3
    assert sum(len(c) for c in data["classes"]) == 6
    assert 0 in data["stabilizer"]


def test_reidemeister_from_file(tmp_path):
    path = tmp_path / "endo.json"
    path.write_text(json.dumps({"kind": "images", "images": [2]}))
    code, out, _ = call("reidemeister", "Z5", "--endo", str(path))
    assert code == 0 and json.loads(out)["reidemeister_number"] == 1


def test_product_kinds():
    code, out, _ = call("product", "Z3", "Z3", "--endo", '{"kind": "perm", "sigma": [1, 0]}')
    data = json.loads(out)
    assert code == 0 and data["reidemeister_number"] == data["formula"] == 3
    code, out, _ = call("product", "Z3", "Z3", "--endo",
                        '{"kind": "matrix", "entries": [["id", "id"], ["0", "id"]]}')
    assert code == 0 and json.loads(out)["formula"] is None
    code, out, _ = call("reidemeister", "S3*S3", "--endo", '{"kind": "diag", "homs": ["id", "id"]}')
    assert code == 0 and json.loads(out)["reidemeister_number"] == 9


def test_product_commuting_violation_is_usage_error():
    code, _, err = call("product", "S3", "S3", "--endo",
                        '{"kind": "matrix", "entries": [["id", "id"], ["0", "id"]]}')
    assert code == 2 and "CommutingConditionViolated" in err


def test_verify_exit_zero_and_deterministic():
    argv = ("verify", "permuted-diag", "--samples", "20", "--seed", "5")
    code1, out1, _ = call(*argv)
    code2, out2, _ = call(*argv)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["passed"] and data["seed"] == 5 and data["samples"] == 20


def test_verify_diag_product_exhaustive():
    code, out, _ = call("verify", "diag-product", "--exhaustive", "--max-order", "36")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_verify_failure_exit_one(monkeypatch):
    from twconj import verify

    def broken(opts):
        res = verify.SuiteResult("jabara")
        res.record(False, {"witness": 1})
        return res

    monkeypatch.setitem(verify.SUITES, "jabara", broken)
    code, out, err = call("verify", "jabara")
    assert code == 1
    assert json.loads(out)["counterexample"] == {"witness": 1}
    code, out, err = call("verify", "jabara", "--format", "table")
    assert code == 1 and json.loads(err)["counterexample"] == {"witness": 1}


def test_max_order_env(monkeypatch):
    monkeypatch.setenv("TWCONJ_MAX_ORDER", "5")
    code, _, err = call("group", "info", "S3")
    assert code == 2 and "OrderCapExceeded" in err
